"""Nondegenerate hermitian forms over F_{q^2}, odd characteristic.

A form is a Gram matrix H with H equal to its conjugate transpose and
det H != 0, for the pairing B(u, v) = u^T H conj(v).  Over a finite field
every such form is congruent to the identity; hermitian_diagonalize produces
the change of basis P with P^T H conj(P) = I explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .ff import FieldSpec

_CHAR_TWO_MSG = "hermitian machinery requires odd characteristic"


@dataclass(frozen=True)
class HermitianForm:
    spec: FieldSpec
    gram: np.ndarray

    @property
    def n(self) -> int:
        return self.gram.shape[0]


def hermitian_validate(spec: FieldSpec, gram) -> HermitianForm:
    """Check conj-symmetry and nondegeneracy; raises ValueError otherwise."""
    if spec.p == 2:
        raise ValueError(_CHAR_TWO_MSG)
    m = linalg.as_matrix(gram)
    if m.min() < 0 or m.max() >= spec.order:
        raise ValueError("entries are not element indices of this field")
    if not np.array_equal(m, linalg.conj_transpose(spec, m)):
        raise ValueError("gram matrix is not conjugate-symmetric")
    if linalg.mat_det_s(spec, m) == 0:
        raise ValueError("gram matrix is degenerate")
    return HermitianForm(spec, m)


def identity_form(spec: FieldSpec, n: int) -> HermitianForm:
    if spec.p == 2:
        raise ValueError(_CHAR_TWO_MSG)
    return HermitianForm(spec, linalg.identity(n))


def congruence(spec: FieldSpec, p_mat, h) -> np.ndarray:
    """P^T H conj(P)."""
    pt = p_mat.T.copy()
    return linalg.mat_mul_s(spec, linalg.mat_mul_s(spec, pt, h),
                            spec.conj_t[p_mat])


def evaluate(spec: FieldSpec, form: HermitianForm, u, v) -> int:
    """B(u, v) = u^T H conj(v)."""
    hv = linalg.mat_vec(spec, form.gram, spec.conj_t[np.asarray(v, dtype=np.int16)])
    acc = 0
    for ui, wi in zip(np.asarray(u, dtype=np.int16), hv):
        acc = int(spec.add_t[acc, spec.mul_t[ui, wi]])
    return acc


def hermitian_diagonalize(spec: FieldSpec, form: HermitianForm) -> tuple[np.ndarray, HermitianForm]:
    """Basis change P with P^T H conj(P) = I, plus the identity form.

    Gram-Schmidt on the columns; when a diagonal entry vanishes it is repaired
    with an anisotropic vector from the current complement, and each pivot is
    scaled by a norm preimage (the norm onto F_q is surjective).
    """
    n = form.n
    h = form.gram
    basis = [np.asarray(row, dtype=np.int16) for row in linalg.identity(n)]

    def pairing(u, v):
        return evaluate(spec, form, u, v)

    chosen: list[np.ndarray] = []
    for step in range(n):
        pool = basis[step:]
        pick = None
        for v in pool:
            if pairing(v, v) != 0:
                pick = v
                break
        if pick is None:
            # all remaining diagonal entries vanish; mix two vectors with
            # B(u, w) != 0 into an anisotropic one, trying u + c w
            found = False
            for i, u in enumerate(pool):
                for w in pool[i + 1:]:
                    if pairing(u, w) == 0:
                        continue
                    for c in range(1, spec.order):
                        cand = spec.add_t[u, spec.mul_t[c, w]].astype(np.int16)
                        if pairing(cand, cand) != 0:
                            pick = cand
                            found = True
                            break
                    if found:
                        break
                if found:
                    break
            if pick is None:
                raise ValueError("form is degenerate on the residual space")
        # orthogonalize the rest of the basis against pick
        beta = pairing(pick, pick)
        beta_inv = int(spec.inv_t[beta])
        new_rest = []
        for v in basis[step:]:
            coef = int(spec.mul_t[pairing(v, pick), beta_inv])
            adj = spec.add_t[v, spec.neg_t[spec.mul_t[coef, pick]]].astype(np.int16)
            if np.any(adj != 0):
                new_rest.append(adj)
        # scale pick so its self-pairing becomes 1; beta lies in F_q
        s = int(spec.inv_t[spec.norm_rep(beta)])
        pick = spec.mul_t[s, pick].astype(np.int16)
        chosen.append(pick)
        # keep an independent tail for the next round
        basis = basis[:step] + [pick] + _independent_tail(spec, chosen, new_rest, n)

    p_mat = np.stack(chosen, axis=1).astype(np.int16)
    check = congruence(spec, p_mat, h)
    if not np.array_equal(check, linalg.identity(n)):
        raise RuntimeError("diagonalization certificate failed")
    return p_mat, identity_form(spec, n)


def _independent_tail(spec, chosen, cands, n):
    """Greedily keep candidates until chosen + tail spans n dimensions."""
    tail: list[np.ndarray] = []
    for v in cands:
        stack = np.stack(chosen + tail + [v], axis=0)
        if linalg.mat_rank(spec, stack) == len(chosen) + len(tail) + 1:
            tail.append(v)
        if len(chosen) + len(tail) == n:
            break
    return tail


def hermitian_equivalent(spec: FieldSpec, f1: HermitianForm, f2: HermitianForm) -> bool:
    """Congruence test; over these fields rank (dimension) decides it."""
    return f1.n == f2.n
