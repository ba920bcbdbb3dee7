# helpers/zpoly/serde.py
# ZPoly JSON form: {"terms": [{"m": int, "n": int, "re": "p/q", "im": "p/q"}]}.

from __future__ import annotations

from typing import Any, Dict

from helpers.validation import (
    ValidationError,
    ensure_dict,
    ensure_int,
    ensure_list,
    ensure_rational,
)

from .poly import ZPoly
from .scalar import GaussianRational, format_rational


def dump_gaussian(c: GaussianRational) -> Dict[str, str]:
    return {"re": format_rational(c.re), "im": format_rational(c.im)}


def load_gaussian(d: Any, *, path: str = "value") -> GaussianRational:
    obj = ensure_dict(d, path=path)
    re = ensure_rational(obj.get("re", 0), path=f"{path}.re")
    im = ensure_rational(obj.get("im", 0), path=f"{path}.im")
    return GaussianRational(re, im)


def zpoly_to_json(p: ZPoly) -> Dict[str, Any]:
    """Serialize in graded lexicographic order (deterministic)."""
    return {
        "terms": [
            {"m": m, "n": n, **dump_gaussian(c)}
            for (m, n), c in p.items()
        ]
    }


def zpoly_from_json(d: Any, *, path: str = "poly") -> ZPoly:
    """
    Parse the JSON form. Duplicate exponent pairs are rejected; zero
    coefficients are accepted and dropped.
    """
    obj = ensure_dict(d, path=path)
    terms_raw = ensure_list(obj.get("terms"), path=f"{path}.terms")
    terms: dict[tuple[int, int], GaussianRational] = {}
    for i, t in enumerate(terms_raw):
        tp = f"{path}.terms[{i}]"
        td = ensure_dict(t, path=tp)
        m = ensure_int(td.get("m"), path=f"{tp}.m", min_v=0)
        n = ensure_int(td.get("n"), path=f"{tp}.n", min_v=0)
        if (m, n) in terms:
            raise ValidationError(f"{tp} repeats exponent pair ({m}, {n})")
        terms[(m, n)] = load_gaussian(td, path=tp)
    return ZPoly(terms)
