import sys
from typing import Optional
from pandas import DataFrame


FLOAT_FORMAT = "%.9g"


def _print_frame(df: DataFrame, fmt: str, out: Optional[str]) -> None:
    """Write result rows as CSV or JSON lines to `out` or standard output.

    Floats carry 9 significant digits and lines end with LF in both formats.

    Args:
        df (DataFrame): The rows to write.
        fmt (str): 'csv' or 'jsonl'.
        out (Optional[str]): The output path; standard output when None.
    """
    if fmt == "csv":
        text = df.to_csv(index = False, float_format = FLOAT_FORMAT, lineterminator = "\n")
    else:
        rounded = df.copy()
        for column in rounded.select_dtypes(include = "float").columns:
            rounded[column] = rounded[column].map(lambda value: float(FLOAT_FORMAT % value))
        text = rounded.to_json(orient = "records", lines = True, double_precision = 15)
        if text and not text.endswith("\n"):
            text += "\n"
    _print_text(text, out)



def _print_text(text: str, out: Optional[str]) -> None:
    """Write text to `out` (UTF-8, LF line endings) or to standard output."""
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(out, "w", encoding = "utf-8", newline = "\n") as handle:
            handle.write(text)



def _print_error(message: str) -> None:
    print(f"✖ {message}", file = sys.stderr)



def _print_points_status(df: DataFrame, command: str, interactive_mode: bool) -> None:
    """Print how many rows a subcommand produced."""
    if interactive_mode:
        if df.empty:
            print(f"⚠️ The {command} command produced no rows.", file = sys.stderr)
        else:
            print(f"✔ Evaluated {len(df)} point(s) for '{command}'.", file = sys.stderr)



def _print_verify_status(df: DataFrame, interactive_mode: bool) -> None:
    """Print the outcome of a verify run; failed checks are always reported.

    Args:
        df (DataFrame): The verify table with columns check, z and passed.
        interactive_mode (bool): Whether to print the summary line.
    """
    for _, row in df[~df["passed"]].iterrows():
        print(f"✖ Check '{row['check']}' failed with z = {row['z']:.3g}.", file = sys.stderr)
    if interactive_mode:
        passed = int(df["passed"].sum())
        symbol = "✔" if passed == len(df) else "⚠️"
        print(f"{symbol} {passed} of {len(df)} verify checks passed.", file = sys.stderr)
