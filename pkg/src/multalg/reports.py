"""Report records for the command line, as plain JSON-ready dicts."""

from __future__ import annotations

from .algebra import FiniteAlgebra, check_idempotent, check_nondegenerate
from .coalgebra import FiniteCoalgebra, co_frobenius_find, cofrobenius_consequences, dual_algebra
from .errors import PropertyMismatch
from .homs import NonDegenerateHom, check_nondegenerate_hom, extend_hom
from .local_units import LocalUnitCertificate, find_unit, firm_ring_check, has_local_units
from .multipliers import (
    MultiplierAlgebra,
    compute_left_multipliers,
    compute_multiplier_algebra,
    compute_right_multipliers,
    density_test,
    embedding_is_homomorphism,
    ideal_law_holds,
    lemma_identities_hold,
    pullback_check,
    strict_closure,
    unflatten,
)
from .serialize import algebra_to_spec


def format_endomorphism(A: FiniteAlgebra, matrix) -> dict:
    """``{label: image}`` for the basis elements with nonzero image."""
    out = {}
    for j, lab in enumerate(A.labels):
        img = tuple(row[j] for row in matrix)
        if any(img):
            out[lab] = A.format_element(img)
    return out


def _endo_basis(A: FiniteAlgebra, space) -> list:
    return [format_endomorphism(A, unflatten(v, A.dim)) for v in space.basis]


def _header(A: FiniteAlgebra) -> dict:
    return {"name": A.name, "field": A.field.name, "dim": A.dim, "basis": list(A.labels)}


def _require(ok: bool, what: str):
    if not ok:
        raise PropertyMismatch(f"verification failed: {what}")


def nondegeneracy_report(A: FiniteAlgebra) -> dict:
    v = check_nondegenerate(A)
    return {
        "left": v.detail["left"],
        "right": v.detail["right"],
        "failed_side": v.detail.get("failed_side"),
        "witness": None if v.ok else A.format_element(v.witness),
    }


def multiplier_algebra_report(MA: MultiplierAlgebra, verify: bool = False) -> dict:
    A = MA.base
    extra = []
    for k in range(A.dim, MA.dim):
        x = MA.basis[k]
        extra.append({
            "label": MA.algebra.labels[k],
            "left_action": format_endomorphism(A, x.lam),
            "right_action": format_endomorphism(A, x.rho),
        })
    if verify:
        _require(lemma_identities_hold(MA).ok, "module-linearity identities")
        _require(embedding_is_homomorphism(MA), "embedding is multiplicative")
        _require(ideal_law_holds(MA), "A is an ideal of M(A)")
    return {
        "dim": MA.dim,
        "basis": list(MA.algebra.labels),
        "unit": MA.algebra.format_element(MA.unit),
        "unit_index": MA.unit_index,
        "extra_multipliers": extra,
        "structure": algebra_to_spec(MA.algebra)["product"],
    }


def multipliers_report(A: FiniteAlgebra, verify: bool = False) -> dict:
    L = compute_left_multipliers(A)
    R = compute_right_multipliers(A)
    out = {
        "algebra": _header(A),
        "left_multipliers": {"dim": L.dim, "basis": _endo_basis(A, L)},
        "right_multipliers": {"dim": R.dim, "basis": _endo_basis(A, R)},
        "nondegenerate": nondegeneracy_report(A),
    }
    if check_nondegenerate(A).ok:
        MA = compute_multiplier_algebra(A)
        out["multiplier_algebra"] = multiplier_algebra_report(MA, verify)
        pb = pullback_check(A)
        out["pullback"] = {
            "dim": pb.dim_pullback,
            "left_injective": pb.left_injective,
            "right_injective": pb.right_injective,
            "equals_multiplier_algebra": pb.equals_multiplier_space,
        }
        if verify:
            _require(pb.equals_multiplier_space and pb.dim_pullback == MA.dim, "pullback description")
    else:
        out["multiplier_algebra"] = None
    return out


def _certificate(A: FiniteAlgebra, cert: LocalUnitCertificate | None, verify: bool):
    if cert is None:
        return None
    if verify:
        _require(cert.verify(A), f"{cert.side} local unit certificate")
    return A.format_element(cert.unit)


def units_report(A: FiniteAlgebra, verify: bool = False) -> dict:
    unit = find_unit(A)
    if verify and unit is not None:
        _require(all(A.multiply(unit, b) == b == A.multiply(b, unit) for b in A.basis()), "unit")
    local = {}
    for side in ("left", "right", "two_sided"):
        v = has_local_units(A, side)
        local[side] = {"value": v.ok, "certificate": _certificate(A, v.witness, verify)}
    firm = firm_ring_check(A)
    return {
        "algebra": _header(A),
        "unit": None if unit is None else A.format_element(unit),
        "local_units": local,
        "idempotent": firm.idempotent,
        "firmness": {
            "tensor_dim": firm.tensor_dim,
            "firm": firm.firm,
            "tensor_square_firm": firm.tensor_square_firm,
        },
    }


def closure_report(A: FiniteAlgebra, verify: bool = False) -> dict:
    MA = compute_multiplier_algebra(A)
    out = {"algebra": _header(A), "multiplier_dim": MA.dim, "closure": {}, "dense": {}}
    emb = MA.embedded_subspace()
    for side in ("both", "left", "right"):
        cl = strict_closure(MA, side)
        out["closure"][side] = {
            "dim": cl.dim,
            "equals_A": cl == emb,
            "basis": [MA.algebra.format_element(v) for v in cl.basis],
        }
        out["dense"][side] = density_test(A, side).ok  # cross-checked with local units
    return out


def analyze_report(A: FiniteAlgebra, verify: bool = False) -> dict:
    out = multipliers_report(A, verify)
    idem = check_idempotent(A)
    out["idempotent"] = {"value": idem.ok, "dim_A2": idem.detail["dim_A2"]}
    units = units_report(A, verify)
    for key in ("unit", "local_units", "firmness"):
        out[key] = units[key]
    if out["multiplier_algebra"] is not None:
        closure = closure_report(A, verify)
        out["strict_closure"] = closure["closure"]
        out["dense"] = closure["dense"]
        if verify:
            _require(closure["dense"]["both"] == units["local_units"]["two_sided"]["value"],
                     "density agrees with local units")
    else:
        out["strict_closure"] = None
        out["dense"] = None
    return out


def extend_report(gamma: NonDegenerateHom, verify: bool = False) -> dict:
    v = check_nondegenerate_hom(gamma)
    out = {
        "source": _header(gamma.source),
        "target": _header(gamma.target.base),
        "nondegenerate": v.ok,
        "gamma_A_B_dim": v.detail["gamma_A_B"].dim,
        "B_gamma_A_dim": v.detail["B_gamma_A"].dim,
    }
    if not v.ok:
        out["extension"] = None
        return out
    ext = extend_hom(gamma)
    MA, MB = ext.source, ext.target
    images = {}
    for k, lab in enumerate(MA.algebra.labels):
        images[lab] = MB.algebra.format_element(ext(MA.algebra.basis_element(k)))
    if verify:
        _require(ext.unital and ext.multiplicative and ext.restricts, "extension properties")
    out["extension"] = {
        "images": images,
        "unital": ext.unital,
        "multiplicative": ext.multiplicative,
        "restricts_to_gamma": ext.restricts,
    }
    return out


def dual_report(C: FiniteCoalgebra) -> dict:
    return algebra_to_spec(dual_algebra(C))


def cofrobenius_report(C: FiniteCoalgebra, verify: bool = False) -> dict:
    s = co_frobenius_find(C)
    f = C.field
    out = {
        "coalgebra": {"name": C.name, "field": f.name, "dim": C.dim, "basis": list(C.labels)},
        "linear_maps_dim": s.linear_maps_dim,
        "best_rank": s.best_rank,
        "candidates_tried": s.candidates_tried,
        "exhaustive": s.exhaustive,
        "witness": None,
    }
    if s.witness is not None:
        Cs = dual_algebra(C)
        out["witness"] = {
            C.labels[t]: Cs.format_element(s.witness.image(t)) for t in range(C.dim)
        }
        cons = cofrobenius_consequences(C, s.witness)
        out["consequences"] = dict(sorted(vars(cons).items()))
        if verify:
            _require(all(vars(cons).values()), "co-Frobenius consequences")
    else:
        out["status"] = "no witness (search exhausted)" if s.exhaustive else "no witness found in bounded schedule"
    return out
