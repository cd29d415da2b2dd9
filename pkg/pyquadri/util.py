import numbers
from fractions import Fraction


def to_scalar(value):
    """Convert an int, Fraction or "p" / "p/q" string to an exact Fraction.

    Floats are refused; they would smuggle rounding into exact checks.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("boolean is not a scalar")
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        text = value.strip()
        if text == "":
            raise ValueError("empty scalar")
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ValueError("zero denominator in {!r}".format(text))
    raise ValueError("unsupported scalar {!r}".format(value))


def scalar_str(value):
    """Lowest-terms text form of a scalar: "3", "-1/2"."""
    value = to_scalar(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)


def parse_entries(text):
    """Parse a comma separated coefficient list such as "-1,0,1/2"."""
    if isinstance(text, (list, tuple)):
        items = text
    else:
        items = [item for item in str(text).split(",") if item.strip() != ""]
    values = sorted(set(to_scalar(item) for item in items))
    if not values:
        raise ValueError("empty coefficient set")
    return tuple(values)


def parse_mask(text):
    """Parse a mask "se:0,0,1;se:1,1,1" into {op: [(i, j, k), ...]}.

    Tensor masks leave the op off: "0,1;1,0" gives {None: [(0, 1), (1, 0)]}.
    """
    mask = {}
    if text is None:
        return None
    for item in str(text).split(";"):
        item = item.strip()
        if not item:
            continue
        if ":" in item:
            op, coords = item.split(":", 1)
            op = op.strip()
        else:
            op, coords = None, item
        index = tuple(int(c) for c in coords.split(","))
        mask.setdefault(op, []).append(index)
    return mask


def basis_label(index, split=None):
    if split is not None and index >= split:
        return "e_{}*".format(index - split)
    return "e_{}".format(index)
