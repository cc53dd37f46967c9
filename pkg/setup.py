from setuptools import setup, find_packages
import os

setup(
    name="interferencepy",
    version="0.1",
    packages=find_packages(exclude=["tests"]),
    install_requires=[
        "numpy",
        "scipy",
        "pandas",
        "python-dotenv",
        "tqdm",
        "joblib>=1.3"
        ],
    extras_require={"test": ["pytest>=7.0", "pytest-cov>=4.0"]},
    entry_points={"console_scripts": ["interferencepy=interferencepy.cli_main:main"]},
    description="Interference functionals, outage and time diversity of Poisson networks with ALOHA and fading",
    long_description=open("README.md").read() if os.path.exists("README.md") else "",
    long_description_content_type="text/markdown",
    license="MIT",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
    ]
)
