"""Exact tables, evaluation, and identity verification for alternating-kernel
(Genocchi-type) polynomial families.

All arithmetic is exact: rational parameters are passed as strings ("p/q"),
ints, or fractions.Fraction, and results come back as exact strings, Fractions,
or parsed JSON documents.  The deformation parameter ``lam`` additionally
accepts the literal ``"symbolic"`` to compute over the rational-function field.
"""

import json as _json
from fractions import Fraction

try:
    from . import _apogen as _core
except ImportError:  # development layout: extension built next to the package
    import _apogen as _core

__version__ = "1.0.0"

__all__ = [
    "alternating_power_sum",
    "default_expected_failures",
    "evaluate",
    "family_names",
    "identity_catalog",
    "multi_power_sum",
    "multi_power_sum_gf",
    "table",
    "tables_equal",
    "verify",
]


def _rat(value):
    """Normalize a rational-valued argument to its exact string form."""
    if value is None or isinstance(value, str):
        return value
    if isinstance(value, bool):
        raise TypeError("expected a rational value, got bool")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    raise TypeError(
        f"expected str, int, or Fraction, got {type(value).__name__}"
    )


def family_names():
    """Names of the buildable polynomial families."""
    return list(_core.family_names())


def identity_catalog():
    """Ids of the verifiable identities, in report order."""
    return list(_core.identity_catalog())


def default_expected_failures():
    """Built-in (id, min_order) pairs whose stated form has a nonzero
    residual from min_order upward."""
    return list(_core.default_expected_failures())


def _spec_kwargs(order, lam, la, lb, lc, a, b, y):
    return dict(
        order=order,
        lam=_rat(lam),
        la=_rat(la),
        lb=_rat(lb),
        lc=_rat(lc),
        a=_rat(a),
        b=_rat(b),
        y=_rat(y),
    )


def table(
    family,
    *,
    order=None,
    lam=None,
    la=None,
    lb=None,
    lc=None,
    a=None,
    b=None,
    y=None,
    max_n=8,
    format="json",
):
    """Build the family table for rows 0..max_n.

    format="json" returns the parsed table document (a dict); format="csv"
    returns CSV text with exact rational cells.
    """
    kwargs = _spec_kwargs(order, lam, la, lb, lc, a, b, y)
    if format == "json":
        return _json.loads(_core.table_json(family, max_n=max_n, **kwargs))
    if format == "csv":
        return _core.table_csv(family, max_n=max_n, **kwargs)
    raise ValueError(f'format must be "json" or "csv", got {format!r}')


def tables_equal(doc_a, doc_b):
    """Whether two JSON table documents (dicts or strings) deserialize to the
    same table."""
    if not isinstance(doc_a, str):
        doc_a = _json.dumps(doc_a)
    if not isinstance(doc_b, str):
        doc_b = _json.dumps(doc_b)
    return _core.tables_equal(doc_a, doc_b)


def evaluate(
    family,
    n,
    x=None,
    *,
    order=None,
    lam=None,
    la=None,
    lb=None,
    lc=None,
    a=None,
    b=None,
    y=None,
):
    """Exact value of the n-th family member, as a Fraction.

    Polynomial families require the evaluation point x; sequence families
    forbid it.  lam must be a rational literal here (symbolic evaluation has
    no single rational value).
    """
    kwargs = _spec_kwargs(order, lam, la, lb, lc, a, b, y)
    return Fraction(_core.evaluate(family, n, x=_rat(x), **kwargs))


def verify(
    *,
    max_n=12,
    lam="symbolic",
    precision=0,
    only=(),
    expect_pass=(),
    spot_checks=True,
):
    """Run the identity verification grids.

    Returns a dict with "ok", the pass/fail/documented_discrepancy counters,
    "unexpected_pass_ids", and the parsed JSON "report".
    """
    result = _core.verify(
        max_n,
        _rat(lam),
        precision,
        list(only),
        list(expect_pass),
        spot_checks,
    )
    result["report"] = _json.loads(result["report"])
    return result


def _sum_result(text):
    # Symbolic sums come back as rational-function strings in L; anything
    # that parses as a plain rational is returned exactly as a Fraction.
    try:
        return Fraction(text)
    except ValueError:
        return text


def alternating_power_sum(k, m, lam=1):
    """sum_{j=1}^{m} (-1)^{j+1} lambda^j j^k, exactly."""
    return _sum_result(_core.alternating_power_sum(k, m, lam=_rat(lam)))


def multi_power_sum(k, l, m, lam=1):
    """Multiplicity-l alternating power sum by direct enumeration."""
    return _sum_result(_core.multi_power_sum(k, l, m, lam=_rat(lam)))


def multi_power_sum_gf(k, l, m, lam=1):
    """The same multiplicity-l sum read off its generating function
    (independent construction, for cross-checking)."""
    return _sum_result(_core.multi_power_sum_gf(k, l, m, lam=_rat(lam)))
