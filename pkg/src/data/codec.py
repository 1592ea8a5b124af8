"""
Maxwell Quasi-Trefftz Toolkit - JSON Codec
===========================================

Library-wide JSON encoding of exact polynomial data:
- Rational: "num/den"
- MultiIndex: [i1, i2, i3]
- HomScalarPoly: {"degree": k, "terms": [{"idx": [...], "coef": "..."}]}, zero terms omitted
- HomVecPoly: [scalar, scalar, scalar]
- GradedVecPoly: {"max_degree": p, "parts": [...]}
- CoefficientJet: {"max_degree": p, "basepoint": [...], "parts": [scalar, ...]}

Decoders raise InputFormatError naming the offending field.
"""

import json
import logging
from typing import Any, Dict, List, Sequence, Tuple

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from bases.spaces import SpaceBasis, SpaceTag
from config import DEFAULT_BASEPOINT, JSON_INDENT
from errors import InputFormatError
from helmholtz.decomposition import HelmholtzTriple
from polyalg.multi_index import MultiIndex
from polyalg.polynomials import CoefficientJet, GradedVecPoly, HomScalarPoly, HomVecPoly
from polyalg.rational import format_rational, parse_rational

logger = logging.getLogger(__name__)


# =============================================================================
# FILE I/O
# =============================================================================

def load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as e:
        raise InputFormatError(f"malformed JSON at line {e.lineno} column {e.colno}: {e.msg}", path) from None
    except UnicodeDecodeError as e:
        raise InputFormatError(f"not UTF-8 text (byte {e.start}): {e.reason}", path) from None


def dump_json(payload: Any, path: str):
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=JSON_INDENT)
        handle.write("\n")


def dumps_json(payload: Any) -> str:
    return json.dumps(payload, indent=JSON_INDENT)


# =============================================================================
# FIELD HELPERS
# =============================================================================

def _field(data: Any, key: str, path: str) -> Any:
    if not isinstance(data, dict):
        raise InputFormatError("expected an object", path or "$")
    if key not in data:
        raise InputFormatError("missing field", f"{path}.{key}" if path else key)
    return data[key]


def _integer(value: Any, path: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise InputFormatError(f"expected an integer >= {minimum}, got {value!r}", path)
    return value


def _array(value: Any, path: str) -> List:
    if not isinstance(value, list):
        raise InputFormatError("expected an array", path)
    return value


# =============================================================================
# POLYNOMIALS
# =============================================================================

def encode_multi_index(idx: MultiIndex) -> List[int]:
    return list(idx.as_tuple())


def decode_multi_index(data: Any, path: str = "idx") -> MultiIndex:
    values = _array(data, path)
    if len(values) != 3:
        raise InputFormatError("a multi-index has exactly 3 entries", path)
    return MultiIndex(*(_integer(v, f"{path}[{i}]") for i, v in enumerate(values)))


def encode_scalar(poly: HomScalarPoly) -> Dict:
    return {
        "degree": poly.degree,
        "terms": [{"idx": encode_multi_index(idx), "coef": format_rational(coef)} for idx, coef in poly.terms()],
    }


def decode_scalar(data: Any, path: str = "") -> HomScalarPoly:
    degree = _integer(_field(data, "degree", path), f"{path}.degree")
    terms = {}
    for i, term in enumerate(_array(_field(data, "terms", path), f"{path}.terms")):
        term_path = f"{path}.terms[{i}]"
        idx = decode_multi_index(_field(term, "idx", term_path), f"{term_path}.idx")
        if idx.degree() != degree:
            raise InputFormatError(f"monomial {idx} does not have degree {degree}", f"{term_path}.idx")
        if idx in terms:
            raise InputFormatError(f"duplicate monomial {idx}", f"{term_path}.idx")
        terms[idx] = parse_rational(_field(term, "coef", term_path), f"{term_path}.coef")
    return HomScalarPoly.from_terms(degree, terms)


def encode_vector(field: HomVecPoly) -> List[Dict]:
    return [encode_scalar(comp) for comp in field.components]


def decode_vector(data: Any, path: str = "") -> HomVecPoly:
    values = _array(data, path or "$")
    if len(values) != 3:
        raise InputFormatError("a vector field has exactly 3 components", path or "$")
    comps = [decode_scalar(v, f"{path}[{i}]") for i, v in enumerate(values)]
    if len({c.degree for c in comps}) != 1:
        raise InputFormatError("components must share one degree", path or "$")
    return HomVecPoly.from_components(*comps)


def encode_graded(poly: GradedVecPoly) -> Dict:
    return {"max_degree": poly.max_degree, "parts": [encode_vector(part) for part in poly.parts]}


def decode_graded(data: Any, path: str = "") -> GradedVecPoly:
    p = _integer(_field(data, "max_degree", path), f"{path}.max_degree")
    parts = _array(_field(data, "parts", path), f"{path}.parts")
    if len(parts) != p + 1:
        raise InputFormatError(f"expected {p + 1} parts", f"{path}.parts")
    decoded = []
    for k, part in enumerate(parts):
        vec = decode_vector(part, f"{path}.parts[{k}]")
        if vec.degree != k:
            raise InputFormatError(f"part has degree {vec.degree}, expected {k}", f"{path}.parts[{k}]")
        decoded.append(vec)
    return GradedVecPoly(p, tuple(decoded))


def encode_jet(eps: CoefficientJet) -> Dict:
    return {
        "max_degree": eps.max_degree,
        "basepoint": [format_rational(v) for v in eps.basepoint],
        "parts": [encode_scalar(part) for part in eps.parts],
    }


def decode_jet(data: Any, path: str = "") -> CoefficientJet:
    p = _integer(_field(data, "max_degree", path), f"{path}.max_degree")
    raw_basepoint = data.get("basepoint", list(DEFAULT_BASEPOINT)) if isinstance(data, dict) else None
    basepoint = _array(raw_basepoint, f"{path}.basepoint")
    if len(basepoint) != 3:
        raise InputFormatError("basepoint has exactly 3 entries", f"{path}.basepoint")
    point = tuple(parse_rational(v, f"{path}.basepoint[{i}]") for i, v in enumerate(basepoint))
    parts = _array(_field(data, "parts", path), f"{path}.parts")
    if len(parts) != p + 1:
        raise InputFormatError(f"expected {p + 1} parts", f"{path}.parts")
    decoded = []
    for k, part in enumerate(parts):
        scalar = decode_scalar(part, f"{path}.parts[{k}]")
        if scalar.degree != k:
            raise InputFormatError(f"part has degree {scalar.degree}, expected {k}", f"{path}.parts[{k}]")
        decoded.append(scalar)
    return CoefficientJet(p, tuple(decoded), point)


# =============================================================================
# COMPOSITE RESULTS
# =============================================================================

def encode_space_basis(basis: SpaceBasis) -> Dict:
    return {
        "space": basis.space_tag.value,
        "degree": basis.degree,
        "dimension": basis.dimension,
        "vectors": [encode_vector(vec) for vec in basis.vectors],
    }


def decode_space_basis(data: Any, path: str = "") -> SpaceBasis:
    try:
        tag = SpaceTag(_field(data, "space", path))
    except ValueError:
        raise InputFormatError("unknown space tag", f"{path}.space") from None
    degree = _integer(_field(data, "degree", path), f"{path}.degree")
    vectors = [decode_vector(v, f"{path}.vectors[{i}]")
               for i, v in enumerate(_array(_field(data, "vectors", path), f"{path}.vectors"))]
    return SpaceBasis(tag, degree, tuple(vectors))


def encode_triple(triple: HelmholtzTriple) -> Dict:
    return {
        "degree": triple.degree,
        "F": encode_vector(triple.F),
        "G": encode_vector(triple.G),
        "H": encode_vector(triple.H),
    }


def decode_triple(data: Any, path: str = "") -> HelmholtzTriple:
    degree = _integer(_field(data, "degree", path), f"{path}.degree")
    F, G, H = (decode_vector(_field(data, key, path), f"{path}.{key}") for key in ("F", "G", "H"))
    return HelmholtzTriple(F, G, H, degree)


def encode_basis_file(p: int, elements: Sequence) -> Dict:
    """basis.json payload from QTBasisElement-like objects."""
    return {
        "p": p,
        "dimension": len(elements),
        "elements": [
            {"name": e.name, "poly": encode_graded(e.poly), "certified": bool(e.certified)}
            for e in elements
        ],
    }


def decode_basis_file(data: Any) -> Tuple[int, List[Tuple[str, GradedVecPoly, bool]]]:
    p = _integer(_field(data, "p", ""), "p")
    entries = []
    for i, item in enumerate(_array(_field(data, "elements", ""), "elements")):
        item_path = f"elements[{i}]"
        name = _field(item, "name", item_path)
        poly = decode_graded(_field(item, "poly", item_path), f"{item_path}.poly")
        if poly.max_degree != p:
            raise InputFormatError("max_degree must equal p", f"{item_path}.poly.max_degree")
        certified = bool(item.get("certified", False))
        entries.append((str(name), poly, certified))
    dimension = _field(data, "dimension", "")
    if dimension != len(entries):
        raise InputFormatError(f"dimension {dimension!r} does not match {len(entries)} elements", "dimension")
    return p, entries
