"""
Utility functions for xlgeod.
"""

import math


# - ANSI colors for status lines on standard error
def _colored(code: str):
    def inner(text: str, bold: bool = False) -> str:
        c = f"1;{code}" if bold else code
        return f"\033[{c}m{text}\033[0m"

    return inner


red, green = _colored("31"), _colored("32")


def wrap_angle(angle: float) -> float:
    """
    Wrap an angle difference into (-pi, pi].

    Args:
        angle: Angle in radians

    Returns:
        Equivalent angle in (-pi, pi]
    """
    return math.pi - (math.pi - angle) % math.tau


def format_checks(checks: dict[str, bool]) -> list[str]:
    """
    Render acceptance checks as colored status lines.

    Args:
        checks: Mapping of check name to pass flag

    Returns:
        One line per check, ✓ in green or ✗ in red
    """
    lines = []
    for name, ok in checks.items():
        if ok:
            lines.append(green(f"✓ {name}"))
        else:
            lines.append(red(f"✗ {name}", bold=True))
    return lines
