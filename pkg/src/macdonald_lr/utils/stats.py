def calculate_pass_rate(passed: int, checked: int) -> float:
    """Calculates the pass rate: passed / checked."""
    if checked > 0:
        return passed / checked
    return 1.0


def calculate_share(part: int, total: int) -> float:
    """Calculates part / total, 0.0 for an empty total."""
    if total > 0:
        return part / total
    return 0.0
