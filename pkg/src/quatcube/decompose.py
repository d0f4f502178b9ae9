"""Constructive decomposition of ring elements into sums of cubes.

Two algebraic identities do the heavy lifting: for any element z that
commutes with integers (every z does),

    6z     == (z+1)**3 + (z-1)**3 + (-z)**3 + (-z)**3
    6z + 3 == (-z-5)**3 + (z+1)**3 + (-2z-6)**3 + (2z+7)**3

so any element whose real part is 0 mod 3 and whose imaginary
coefficients are 0 mod 6 is a sum of 4 cubes.  The decomposer reduces an
arbitrary target to that shape by subtracting the cubes of one or two
small "congruence roots" chosen from the target's residue class mod 6:

* cases 1/2 (3 does not divide both a and b): pick two classes from
  S or T2/T3 whose residues sum to the target's, take the congruence
  root of each, subtract the two cubes; 2 + 4 = 6 roots total;
* case 3 (3 divides a and b): every cube-subgroup element directly
  admits a congruence root; 1 + 4 = 5 roots total.

Targets already reduced skip the congruence step and get 4 roots.  In
cases 2b/2c with the parameters in the swapped orientation, the target
is moved through the mirror-ring isomorphism, decomposed there, and the
roots mapped back.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotRepresentable, PreconditionViolated
from .quat import Quaternion, cube, swap_iso
from .residues import (
    Case,
    CaseTag,
    ResidueClass,
    classify_case,
    delta,
    in_S,
    in_T2,
    in_T3,
    lnr6,
)

# residue alphabets mod 6: odd, not divisible by 3, divisible by 3
_ODD = (1, 3, 5)
_UNIT = (1, 2, 4, 5)
_DIV3 = (0, 3)


@dataclass(frozen=True, slots=True)
class Decomposition:
    """A target plus an ordered list of roots whose cubes sum to it."""

    target: Quaternion
    roots: tuple[Quaternion, ...]
    case: CaseTag

    @property
    def count(self) -> int:
        return len(self.roots)


def identity_6z(z: Quaternion) -> list[Quaternion]:
    """Four roots whose cubes sum to 6z."""
    return [z + 1, z - 1, -z, -z]


def identity_6z3(z: Quaternion) -> list[Quaternion]:
    """Four roots whose cubes sum to 6z + 3."""
    return [-z - 5, z + 1, -2 * z - 6, 2 * z + 7]


def member_cube_subgroup(alpha: Quaternion) -> bool:
    """Whether alpha lies in the additive group generated by all cubes.

    That group is the whole ring unless 3 divides both a and b, in which
    case it consists exactly of the elements whose imaginary coefficients
    are divisible by 3.
    """
    if classify_case(alpha.params).case is Case.CASE3:
        return all(c % 3 == 0 for c in alpha.imaginary())
    return True


def cube_root_congruence(alpha: Quaternion, case: CaseTag) -> Quaternion:
    """A root x with Re(x**3) = Re(alpha) mod 3 and Im(x**3) = Im(alpha) mod 6.

    The recipe takes the least residues of alpha's coefficients:
    x_l = lnr6(alpha_l) for l in 1..3 (or 6 - lnr6(alpha_l) in case 2c)
    and x_0 = lnr6(alpha_0) - 3*delta(alpha, case).

    Preconditions: for case 1 alpha's class must lie in S; for cases
    2a/2b/2c in T2 or T3, with the ring already in normalized
    orientation; for case 3 alpha must lie in the cube subgroup.
    """
    actual = classify_case(alpha.params)
    if actual.case is not case.case:
        raise PreconditionViolated(
            f"case {case} does not match ring ({alpha.params.a},{alpha.params.b})"
        )
    if actual.swapped:
        raise PreconditionViolated(
            "ring orientation must be normalized; apply swap_iso first"
        )
    cls = ResidueClass.of(alpha)
    if case.case is Case.CASE3:
        if any(c % 3 for c in alpha.imaginary()):
            raise PreconditionViolated(
                "imaginary coefficients must be divisible by 3 in case 3"
            )
    elif case.case is Case.CASE1:
        if not in_S(cls):
            raise PreconditionViolated(f"residue class {cls.residues()} not in S")
    else:
        if not (in_T2(cls) or in_T3(cls)):
            raise PreconditionViolated(f"residue class {cls.residues()} not in T2 or T3")

    x0 = lnr6(alpha.c0) - 3 * delta(alpha, case)
    if case.case is Case.CASE2C:
        imag = [6 - lnr6(c) for c in alpha.imaginary()]
    else:
        imag = [lnr6(c) for c in alpha.imaginary()]
    return Quaternion(alpha.params, x0, imag[0], imag[1], imag[2])


def _least_pair(first: tuple[int, ...], second: tuple[int, ...], t: int, m: int) -> tuple[int, int]:
    # lexicographically least (u, v) in first x second with u + v = t mod m
    for u in first:
        need = (t - u) % m
        for v in second:
            if v % m == need:
                return u, v
    raise AssertionError("residue alphabets should cover every target")


def select_pair(alpha: Quaternion, case: CaseTag) -> tuple[ResidueClass, ResidueClass]:
    """Two residue classes in the case's set whose sum matches alpha's class.

    Case 1 yields two classes in S.  Case 2 yields both in T2 when 3
    divides alpha's j-coefficient, both in T3 when 3 divides the
    k-coefficient, and one of each otherwise.  Real parts match mod 3,
    imaginary coefficients mod 6.  The choice is deterministic: each
    coordinate takes the lexicographically least admissible pair, which
    makes the overall pair of classes lexicographically least.
    """
    if case.case is Case.CASE3:
        raise PreconditionViolated("pair selection applies to cases 1 and 2 only")
    t0, t1, t2, t3 = (lnr6(c) for c in alpha.coefficients())
    if case.case is Case.CASE1:
        sets2 = sets3 = (_UNIT, _UNIT)
    elif t2 % 3 == 0:
        sets2, sets3 = (_DIV3, _DIV3), (_UNIT, _UNIT)
    elif t3 % 3 == 0:
        sets2, sets3 = (_UNIT, _UNIT), (_DIV3, _DIV3)
    else:
        sets2, sets3 = (_DIV3, _UNIT), (_UNIT, _DIV3)

    u0, v0 = _least_pair(_ODD, _ODD, t0, 3)
    u1, v1 = _least_pair(_UNIT, _UNIT, t1, 6)
    u2, v2 = _least_pair(sets2[0], sets2[1], t2, 6)
    u3, v3 = _least_pair(sets3[0], sets3[1], t3, 6)

    a6, b6 = alpha.params.a % 6, alpha.params.b % 6
    return (
        ResidueClass(u0, u1, u2, u3, a6, b6),
        ResidueClass(v0, v1, v2, v3, a6, b6),
    )


def _reduced(alpha: Quaternion) -> bool:
    # ready for the identities: real 0 mod 3, imaginary 0 mod 6
    return alpha.c0 % 3 == 0 and all(c % 6 == 0 for c in alpha.imaginary())


def _identity_roots(beta: Quaternion) -> list[Quaternion]:
    params = beta.params
    if beta.c0 % 6 == 0:
        z = Quaternion(params, beta.c0 // 6, beta.c1 // 6, beta.c2 // 6, beta.c3 // 6)
        return identity_6z(z)
    # real part is 3 mod 6: peel the scalar 3 off the real coefficient
    z = Quaternion(params, (beta.c0 - 3) // 6, beta.c1 // 6, beta.c2 // 6, beta.c3 // 6)
    return identity_6z3(z)


def _odd_residue(n: int) -> int:
    # the unique odd residue in {1,3,5} congruent to n mod 3
    r = n % 6
    return r if r % 2 else (r + 3) % 6


def _roots_normalized(alpha: Quaternion, tag: CaseTag) -> list[Quaternion]:
    if _reduced(alpha):
        return _identity_roots(alpha)
    if tag.case is Case.CASE3:
        x1 = cube_root_congruence(alpha, tag)
        beta = alpha - cube(x1)
        assert _reduced(beta), "congruence root failed to reduce the target"
        return [x1, *_identity_roots(beta)]

    first, _second = select_pair(alpha, tag)
    x1 = cube_root_congruence(first.lift(alpha.params), tag)
    resid = alpha - cube(x1)
    # lift the residual back into the class set: imaginary residues are
    # already exact, the real part needs the odd representative mod 3
    lift2 = Quaternion(
        alpha.params,
        _odd_residue(resid.c0),
        lnr6(resid.c1),
        lnr6(resid.c2),
        lnr6(resid.c3),
    )
    x2 = cube_root_congruence(lift2, tag)
    beta = resid - cube(x2)
    assert _reduced(beta), "congruence roots failed to reduce the target"
    return [x1, x2, *_identity_roots(beta)]


def decompose(alpha: Quaternion) -> Decomposition:
    """Write alpha as a sum of cubes: at most 6 in cases 1/2, 5 in case 3.

    Raises :class:`NotRepresentable` when alpha lies outside the cube
    subgroup (possible only when 3 divides both a and b).  The returned
    decomposition always verifies exactly; already-reduced targets get 4
    roots.
    """
    tag = classify_case(alpha.params)
    if not member_cube_subgroup(alpha):
        raise NotRepresentable(
            f"{alpha} is not in the cube subgroup of "
            f"({alpha.params.a},{alpha.params.b})"
        )
    if tag.swapped:
        inner = decompose(swap_iso(alpha))
        dec = Decomposition(alpha, tuple(swap_iso(r) for r in inner.roots), tag)
    else:
        dec = Decomposition(alpha, tuple(_roots_normalized(alpha, tag)), tag)
    assert verify(dec), "decomposition failed self-verification"
    return dec


def verify(dec: Decomposition) -> bool:
    """Exact check: the cubes of the roots sum to the target and the root
    count respects the case bound (6 for cases 1/2, 5 for case 3)."""
    total = Quaternion.scalar(dec.target.params, 0)
    for r in dec.roots:
        if r.params != dec.target.params:
            return False
        total = total + cube(r)
    bound = 5 if dec.case.case is Case.CASE3 else 6
    return total == dec.target and len(dec.roots) <= bound
