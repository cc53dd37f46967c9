import sys
from pandas import DataFrame


def _print_curve_status(df: DataFrame, interactive_mode: bool) -> None:
    """Print the status of an outage curve evaluation.

    Args:
        df (DataFrame): The evaluated curve.
        interactive_mode (bool): Whether to print.
    """
    if interactive_mode:
        if df.empty:
            print("⚠️ No intensities given; the outage curve is empty.", file = sys.stderr)
        else:
            print(f"✔ Evaluated {len(df)} outage points by {df['method'].iloc[0].replace('_', ' ')}.", file = sys.stderr)



def _print_clip_warning(label: str, value: float, clipped: float, interactive_mode: bool) -> None:
    """Warn that a probability left [0, 1] by more than rounding noise."""
    if interactive_mode:
        print(f"⚠️ {label} evaluated to {value:.6g}; clipped to {clipped:g}. The series or quadrature lost accuracy.", file = sys.stderr)
