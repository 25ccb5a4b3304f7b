"""Coxeter-element combinatorics: orbit exponents and the tau-phi splitting.

Everything here is ordering-sensitive: an analysis is attached to a chosen
ordering (alpha_1, ..., alpha_n) of the simple roots, with the Coxeter
element c = s_{alpha_n} ... s_{alpha_1}.  Position subscripts (the j in
J, a_j, phi_j) always refer to that ordering, not to the Bourbaki
numbering of the roots sitting at those positions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from . import weyl
from .charring import Character, adjoint_character, char_to_str, e
from .cohomology import euler_char, h0_line, ss_nonempty
from .report import Report
from .rootsys import Root, RootSystem
from .weyl import WeylElement, bruhat_leq, coxeter_elements, element_order, from_word

__all__ = [
    "CoxeterAnalysis",
    "analyze",
    "yz_exponent",
    "is_typeA_extremal",
    "verify_prop51",
    "verify_lemma54_55_56",
    "verify_thmC_typeA",
    "verify_cor52_53_58",
]


@dataclass
class CoxeterAnalysis:
    """The J / phi / tau data of one ordered Coxeter element.

    ordering[p-1] is the simple-root index at position p.  a[j] counts how
    long the c-orbit of the position-j root stays simple before turning
    negative; positions without that property are absent.  J collects the
    positions of J_prime whose c^{-1}-image is not simple.  c = tau * phi
    with lengths adding.
    """

    ordering: tuple[int, ...]
    c: WeylElement
    coxeter_number: int
    J_prime: tuple[int, ...]
    a: dict[int, int]
    J: tuple[int, ...]
    phi_words: dict[int, tuple[int, ...]]
    phi: WeylElement
    tau: WeylElement

    def phi_factor(self, j: int) -> WeylElement:
        return from_word(self.c.rs, self.phi_words[j])


def analyze(rs: RootSystem, ordering: Sequence[int]) -> CoxeterAnalysis:
    """Compute the orbit data of c = s_{alpha_n} ... s_{alpha_1}.

    Asserts the structural identities on the way out: phi is reduced as
    the concatenation of the phi_j words and l(c) = l(phi) + l(tau).
    """
    ordering = tuple(ordering)
    if sorted(ordering) != list(range(1, rs.rank + 1)):
        raise ValueError(f"ordering {ordering} is not a permutation of the simples")
    c = from_word(rs, tuple(reversed(ordering)))
    h = element_order(c)

    simple_coords = {r.coords: i + 1 for i, r in enumerate(rs.simple_roots)}
    J_prime: list[int] = []
    a: dict[int, int] = {}
    for pos in range(1, rs.rank + 1):
        root = rs.simple_roots[ordering[pos - 1] - 1]
        prefix_simple = True
        cur = root
        steps = 0
        while steps < h:
            if cur.coords not in simple_coords:
                prefix_simple = False
                break
            cur = c.apply_root(cur)
            steps += 1
            if not cur.positive:
                break
        if prefix_simple and steps < h and not cur.positive:
            J_prime.append(pos)
            a[pos] = steps

    c_inv = c.inverse()
    J = []
    for pos in J_prime:
        root = rs.simple_roots[ordering[pos - 1] - 1]
        img = c_inv.apply_root(root)
        if img.coords not in simple_coords:
            J.append(pos)

    phi_words: dict[int, tuple[int, ...]] = {}
    for pos in J:
        root = rs.simple_roots[ordering[pos - 1] - 1]
        letters = []
        cur = root
        for _ in range(a[pos]):
            letters.append(simple_coords[cur.coords])
            cur = c.apply_root(cur)
        phi_words[pos] = tuple(letters)

    phi_word = tuple(letter for pos in J for letter in phi_words[pos])
    phi = from_word(rs, phi_word)
    if phi.length != len(phi_word):
        raise AssertionError("phi word is not reduced")
    tau = c * phi.inverse()
    if c.length != tau.length + phi.length:
        raise AssertionError("lengths do not add in c = tau * phi")
    if tau * phi != c:
        raise AssertionError("tau * phi is not c")

    return CoxeterAnalysis(
        ordering=ordering,
        c=c,
        coxeter_number=h,
        J_prime=tuple(J_prime),
        a=a,
        J=tuple(J),
        phi_words=phi_words,
        phi=phi,
        tau=tau,
    )


def _check_coxeter(rs: RootSystem, c: WeylElement) -> None:
    if sorted(c.reduced_word()) != list(range(1, rs.rank + 1)):
        raise ValueError("element is not a Coxeter element")


def yz_exponent(rs: RootSystem, c: WeylElement, alpha: int) -> int:
    """Minimal j >= 1 with c^j(omega_alpha) = w0(omega_alpha).

    Existence below the Coxeter number is a theorem; running out of the
    cyclic group without a hit is therefore a hard engine error.
    """
    rs._check_index(alpha)
    _check_coxeter(rs, c)
    h = element_order(c)
    omega = rs.fundamental_weights[alpha - 1]
    target = weyl.longest_element(rs).apply(omega)
    cur = omega
    for j in range(1, h):
        cur = c.apply(cur)
        if cur == target:
            return j
    raise AssertionError(
        f"no exponent below the Coxeter number for alpha_{alpha}")


def is_typeA_extremal(rs: RootSystem, c: WeylElement) -> bool:
    """True iff c or c^{-1} is the monotone-path Coxeter element of A_n.

    Asserted on the way out: this agrees with the semistability criterion
    holding for both c and c^{-1}.
    """
    if rs.ct.family != "A":
        raise ValueError("extremality in this sense is a type A notion")
    _check_coxeter(rs, c)
    n = rs.rank
    down = from_word(rs, tuple(range(n, 0, -1)))
    up = from_word(rs, tuple(range(1, n + 1)))
    by_word = c == down or c == up
    by_ss = ss_nonempty(rs, c) and ss_nonempty(rs, c.inverse())
    if by_word != by_ss:
        raise AssertionError(
            "path-word extremality disagrees with the semistability criterion")
    return by_word


def verify_prop51(rs: RootSystem, guard: int | None = None) -> Report:
    """Orbit exponents exist below h for every Coxeter element and alpha."""
    start = time.perf_counter()
    counterexamples = []
    rows = []
    elements = coxeter_elements(rs)
    for c, word in elements:
        h = element_order(c)
        for alpha in range(1, rs.rank + 1):
            try:
                j = yz_exponent(rs, c, alpha)
            except AssertionError:
                counterexamples.append({
                    "c_word": list(word),
                    "alpha": alpha,
                    "reason": f"no exponent below h = {h}",
                })
                continue
            rows.append({"c_word": list(word), "alpha": alpha, "j": j})
    return Report(
        check_id="prop51",
        cartan_type=str(rs.ct),
        universe_size=len(elements) * rs.rank,
        passed=not counterexamples,
        counterexamples=counterexamples,
        elapsed=time.perf_counter() - start,
        details={
            "coxeter_number": element_order(elements[0][0]),
            "rows": rows,
        },
    )


def verify_lemma54_55_56(rs: RootSystem, guard: int | None = None) -> Report:
    """Exhaustive per-ordering checks of the simple-image combinatorics.

    For every ordering of the simple roots: the simple-image biconditional,
    orthogonality of the J-orbits, commutation of the phi factors, length
    additivity of c = tau * phi, and the height inequality for positions
    whose reflection lies below tau.
    """
    if not rs.simply_laced:
        raise ValueError("these combinatorial lemmas assume a simply-laced type")
    start = time.perf_counter()
    counterexamples = []
    n = rs.rank
    universe = 0
    for perm in permutations(range(1, n + 1)):
        universe += 1
        analysis = analyze(rs, perm)
        c = analysis.c
        roots = [rs.simple_roots[perm[p - 1] - 1] for p in range(1, n + 1)]

        # c maps the position-i root to the position-j root iff j is the
        # unique earlier neighbor of i and i the unique later neighbor of j
        for i in range(1, n + 1):
            img = c.apply_root(roots[i - 1])
            for j in range(1, n + 1):
                if i == j:
                    continue
                lhs = img.coords == roots[j - 1].coords
                earlier = [k for k in range(1, i)
                           if rs.pairing_root(roots[k - 1].weight, roots[i - 1]) != 0]
                later = [k for k in range(j + 1, n + 1)
                         if rs.pairing_root(roots[j - 1].weight, roots[k - 1]) != 0]
                rhs = earlier == [j] and later == [i]
                if lhs != rhs:
                    counterexamples.append({
                        "ordering": list(perm), "clause": "simple-image",
                        "i": i, "j": j, "image": lhs, "conditions": rhs,
                    })

        # distinct J-orbits are orthogonal while they stay simple
        for jdx, j in enumerate(analysis.J):
            for k in analysis.J[jdx + 1:]:
                orbit_j = _orbit_prefix(rs, c, roots[j - 1], analysis.a[j])
                orbit_k = _orbit_prefix(rs, c, roots[k - 1], analysis.a[k])
                for bj in orbit_j:
                    for bk in orbit_k:
                        if rs.pairing_root(bj.weight, bk) != 0:
                            counterexamples.append({
                                "ordering": list(perm), "clause": "orbit-orthogonality",
                                "j": j, "k": k,
                                "beta_j": list(bj.coords),
                                "beta_k": list(bk.coords),
                            })

        # the phi factors commute pairwise
        for jdx, j in enumerate(analysis.J):
            fj = analysis.phi_factor(j)
            for k in analysis.J[jdx + 1:]:
                fk = analysis.phi_factor(k)
                if fj * fk != fk * fj:
                    counterexamples.append({
                        "ordering": list(perm), "clause": "factor-commutation",
                        "j": j, "k": k,
                    })

        # lengths add in c = tau * phi
        if analysis.c.length != analysis.tau.length + analysis.phi.length:
            counterexamples.append({
                "ordering": list(perm), "clause": "length-additivity",
                "tau_word": _wordlist(analysis.tau),
                "phi_word": _wordlist(analysis.phi),
            })

        # height comparison for positions whose reflection is below tau
        for r in range(1, n + 1):
            s_r = weyl.simple_reflection(rs, perm[r - 1])
            if not bruhat_leq(s_r, analysis.tau):
                continue
            via_c = c.apply_root(roots[r - 1]).height
            via_phi = analysis.phi.apply_root(roots[r - 1]).height
            if via_c < via_phi:
                counterexamples.append({
                    "ordering": list(perm), "clause": "height-comparison",
                    "r": r, "height_c": via_c, "height_phi": via_phi,
                })
    return Report(
        check_id="lemma54_56",
        cartan_type=str(rs.ct),
        universe_size=universe,
        passed=not counterexamples,
        counterexamples=counterexamples,
        elapsed=time.perf_counter() - start,
    )


def _orbit_prefix(rs: RootSystem, c: WeylElement, root: Root, steps: int) -> list[Root]:
    out = [root]
    cur = root
    for _ in range(steps - 1):
        cur = c.apply_root(cur)
        out.append(cur)
    return out


def _wordlist(w: WeylElement) -> list[int]:
    return list(w.reduced_word())


def verify_thmC_typeA(rs: RootSystem, guard: int | None = None) -> Report:
    """Type A powers of the staircase Coxeter element c = s_n ... s_1.

    Checks c^r = w_{alpha_r}, reads off the dot-action weight
    (c^r)^{-1} . 0 = epsilon (n+1) omega_r recording the single sign
    epsilon, and confirms chi(c^r, e^{that weight}) = (-1)^{l(c^r)} e^0.
    Non-extremal Coxeter elements get informational rows only.
    """
    if rs.ct.family != "A":
        raise ValueError("the staircase analysis is specific to type A")
    start = time.perf_counter()
    n = rs.rank
    c = from_word(rs, tuple(range(n, 0, -1)))
    counterexamples = []
    signs = set()
    zero = rs.zero()
    for r in range(1, n + 1):
        cr = c ** r
        w_r = weyl.min_parabolic_rep(rs, r)
        if cr != w_r:
            counterexamples.append({
                "r": r, "reason": "c^r is not the minimal representative",
                "c_power_word": _wordlist(cr), "w_alpha_word": _wordlist(w_r),
            })
            continue
        lam = cr.inverse().dot(zero)
        omega = rs.fundamental_weights[r - 1]
        eps = None
        for cand in (1, -1):
            if lam == cand * (n + 1) * omega:
                eps = cand
        if eps is None:
            counterexamples.append({
                "r": r, "reason": "dot weight is not +-(n+1) omega_r",
                "weight_fw": list(lam.fw),
            })
            continue
        signs.add(eps)
        chi = euler_char(rs, cr, e(lam))
        expected = e(zero, 1 if cr.length % 2 == 0 else -1)
        if chi != expected:
            counterexamples.append({
                "r": r, "reason": "Euler value is not (-1)^l e^0",
                "chi": char_to_str(rs, chi),
            })
    if len(signs) > 1:
        counterexamples.append({
            "reason": "inconsistent sign across r", "signs": sorted(signs),
        })

    nonextremal_rows = []
    for cox, word in coxeter_elements(rs):
        if is_typeA_extremal(rs, cox):
            continue
        lam = cox.inverse().dot(zero)
        chi = euler_char(rs, cox, e(lam))
        expected = e(zero, 1 if cox.length % 2 == 0 else -1)
        nonextremal_rows.append({
            "c_word": list(word),
            "euler_is_signed_e0": chi == expected,
            "euler": char_to_str(rs, chi),
        })
    return Report(
        check_id="thmC_typeA",
        cartan_type=str(rs.ct),
        universe_size=n,
        passed=not counterexamples,
        counterexamples=counterexamples,
        elapsed=time.perf_counter() - start,
        details={
            "epsilon": sorted(signs)[0] if len(signs) == 1 else None,
            "nonextremal_rows": nonextremal_rows,
        },
    )


def verify_cor52_53_58(rs: RootSystem, guard: int | None = None) -> Report:
    """Cyclic-group sweeps attached to each Coxeter element.

    Asserts for every Coxeter element that some power c^j (1 <= j < h)
    has full adjoint tangent character over its inversion set.  The two
    summed identities (over C' = {c,...,c^{h-1}} and the signed Euler sum
    over C = {e,...,c^{h-1}}) are asserted only for type A extremal
    elements, where full degree-wise vanishing certifies them; other
    elements get informational rows.
    """
    if not rs.simply_laced:
        raise ValueError("these sweeps assume a simply-laced type")
    start = time.perf_counter()
    adjoint = adjoint_character(rs)
    zero = rs.zero()
    counterexamples = []
    rows = []
    elements = coxeter_elements(rs)
    for c, word in elements:
        h = element_order(c)
        min_j = None
        for j in range(1, h):
            cj = c ** j
            total = Character.zero()
            for beta in cj.inversion_set():
                total = total + h0_line(rs, cj, beta.weight)
            if total == adjoint:
                min_j = j
                break
        if min_j is None:
            counterexamples.append({
                "c_word": list(word),
                "reason": "no power below h has full adjoint tangent character",
            })

        sum53 = Character.zero()
        for j in range(1, h):
            cj = c ** j
            for beta in cj.inversion_set():
                sum53 = sum53 + h0_line(rs, cj, beta.weight)
        eq53 = sum53 == (h - 1) * adjoint

        sum58 = Character.zero()
        for j in range(0, h):
            cj = c ** j
            lam = cj.inverse().dot(zero)
            chi = euler_char(rs, cj, e(lam))
            sign = 1 if cj.length % 2 == 0 else -1
            sum58 = sum58 + sign * chi
        eq58 = sum58 == h * e(zero)

        extremal = rs.ct.family == "A" and is_typeA_extremal(rs, c)
        if extremal:
            if not eq53:
                counterexamples.append({
                    "c_word": list(word), "clause": "cyclic-sum",
                    "difference": char_to_str(rs, (h - 1) * adjoint - sum53),
                })
            if not eq58:
                counterexamples.append({
                    "c_word": list(word), "clause": "signed-euler-sum",
                    "sum": char_to_str(rs, sum58),
                })
        rows.append({
            "c_word": list(word),
            "h": h,
            "extremal": extremal,
            "min_full_power": min_j,
            "cyclic_sum_matches": eq53,
            "signed_euler_sum_matches": eq58,
            "ss_c": ss_nonempty(rs, c),
            "ss_c_inv": ss_nonempty(rs, c.inverse()),
        })
    return Report(
        check_id="cor52_53_58",
        cartan_type=str(rs.ct),
        universe_size=len(elements),
        passed=not counterexamples,
        counterexamples=counterexamples,
        elapsed=time.perf_counter() - start,
        details={"rows": rows},
    )
