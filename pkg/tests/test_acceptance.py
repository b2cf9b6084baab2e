"""Acceptance criteria, one test each.

Run under pytest for a PASS/FAIL line per criterion in the terminal summary,
or directly with ``python3 tests/test_acceptance.py``.
"""
import random
import sys
import time

from mpmath import mp

from fmcurve import checks, elliptic, group, model, moduli, orbifold
from fmcurve.field import embed, random_elem
from fmcurve.moebius import roots_of_unity
from fmcurve.omega import FIXTURE, random_point

RESULTS: dict[int, tuple[str, str]] = {}


def criterion(n: int, title: str):
    def deco(fn):
        def run():
            try:
                fn()
            except AssertionError as exc:
                RESULTS[n] = ("FAIL", f"{title}: {str(exc).splitlines()[0]}")
                raise
            RESULTS[n] = ("PASS", title)
        run.__name__ = fn.__name__
        run.number = n
        return run
    return deco


@criterion(1, "lambda-invariant subgroups by exhaustive search")
def test_c01_lemma():
    t = time.perf_counter()
    subs = group.all_subgroups()
    inv = group.invariant_subgroups(group.LAMBDA, subs)
    elapsed = time.perf_counter() - t
    assert len(subs) == 2825, f"{len(subs)} subgroups"
    assert set(inv) == {group.TRIVIAL, group.K, group.KSTAR, group.WHOLE}, [group.name_of(h) for h in inv]
    assert group.ZETA_AUT.image(group.K) == group.KSTAR and group.ZETA_AUT.image(group.KSTAR) == group.K
    assert elapsed < 5, f"took {elapsed:.2f}s"


@criterion(2, "free action and genus chain 49/7/3/1/0")
def test_c02_genus_chain():
    assert group.acts_freely(group.K) and group.acts_freely(group.KSTAR)
    line = next(l for l in group.fano_lines(group.K) if 3 in l)
    chain = [group.TRIVIAL, group.K, group.preimage(group.K, [3]), group.preimage(group.K, line), group.WHOLE]
    sigs = [orbifold.quotient_genus_and_cones(j) for j in chain]
    assert [s.genus for s in sigs] == [49, 7, 3, 1, 0], [str(s) for s in sigs]
    assert [len(s.cone_orders) for s in sigs] == [0, 0, 4, 6, 7], [str(s) for s in sigs]
    assert all(set(s.cone_orders) <= {2} for s in sigs)


@criterion(3, "quotient model relations, monomials and involutions")
def test_c03_quotient_model():
    rng = random.Random(3)
    for mu in (FIXTURE, moduli.mu0(), random_point(rng)):
        rows = model.check_quotient_relations(mu)
        assert len(rows) == 35, len(rows)
        assert all(r.ok for r in rows), [r.text for r in rows if not r.ok]
    derived = model.invariant_monomials(group.K)
    assert len(derived) == 13 and set(derived) == set(model.T_MONOMIALS)
    assert [model.involution_signs(j) for j in (1, 2, 3)] == model.PUBLISHED_INVOLUTION_SIGNS


@criterion(4, "automorphism lifts at mu0")
def test_c04_lifts():
    m0 = moduli.mu0()
    rot, inv = model.lifted_rotation_witness(), model.lifted_involution_witness()
    assert model.verify_linear_aut(m0, rot)
    assert model.verify_linear_aut(m0, inv)
    assert group.conjugation_action(rot.source) == group.LAMBDA
    assert group.conjugation_action(inv.source) == group.ZETA_AUT
    assert not model.verify_linear_aut(FIXTURE, rot)


@criterion(5, "special point conditions and pulled-back root sets")
def test_c05_special_point():
    parts = moduli.zeta_condition_parts(moduli.mu0())
    assert parts["mu6 = mu5^2/mu4"], "mu6 = mu5^2/mu4"
    assert parts["mu7 = mu5^2"], "mu7 = mu5^2"
    assert model.pullback_root_sets() == model.CLASSICAL_ROOT_SETS, "pullback root sets"
    assert parts["mu5^6 - 5mu5^4 - 6mu5^2 - 1 = 0"], (
        "mu5^6 - 5mu5^4 - 6mu5^2 - 1 != 0 at mu0 (the +6mu5^2 form holds: "
        f"{parts[moduli.ZETA_SIGN_CORRECTED]})")


@criterion(6, "Jacobian factors at the j-invariant level")
def test_c06_j_invariants():
    problems = []
    seven = {elliptic.j_invariant(c) for c in elliptic.t_curves(moduli.mu0())}
    if len(seven) != 1:
        problems.append(f"mu0 factors give {len(seven)} j values")
    fixture = [elliptic.j_invariant(c) for c in elliptic.t_curves(FIXTURE)]
    if len(set(fixture)) != 7:
        problems.append(f"fixture factors give only {len(set(fixture))} distinct j values")
    counts = elliptic.thirty_five_factors(roots_of_unity())
    if len(counts) != 5 or sorted(counts.values()) != [7] * 5:
        problems.append(f"35 factors: {len(counts)} distinct, multiplicities {sorted(counts.values())}")
    js = {k: elliptic.j_invariant(c) for k, c in elliptic.e_curves_mu0().items()}
    if {js[f"E{i}"] for i in range(1, 6)} != set(counts):
        problems.append("E1..E5 do not match the 35-factor values as a set")
    if js["E3"] != js["E"]:
        problems.append("j(E3) != j(E)")
    assert not problems, "; ".join(problems)


@criterion(7, "moduli action and equivalence search")
def test_c07_moduli():
    assert moduli.group_order() == 5040
    assert moduli.is_transposition(moduli.A_PERM) and moduli.cycle_type(moduli.B_PERM) == [7]
    m0 = moduli.mu0()
    assert moduli.equivalent(m0, moduli.dual_mu(m0)) is not None
    rng = random.Random(7)
    perms = list(moduli.group_words())
    for i in range(100):
        mu = random_point(rng)
        other = moduli.act_perm(rng.choice(perms), mu) if i % 2 == 0 else random_point(rng)
        by_orbit = moduli.equivalent(mu, other) is not None
        by_sets = moduli.equivalent_by_branch_sets(mu, other) is not None
        assert by_orbit == by_sets, f"case {i}"
        assert by_orbit == (i % 2 == 0), f"case {i}"


@criterion(8, "smoothness certificates")
def test_c08_smoothness():
    rng = random.Random(8)
    for mu in [moduli.mu0()] + [random_point(rng) for _ in range(20)]:
        cert = model.smoothness_certificate(mu)
        assert cert.ok, cert.witnesses
    case = model.smoothness_certificate(FIXTURE).case(3, 4)
    assert case["status"] == "inconsistent" and "(mu4 - 1)*x1^2 = 0" in case["reason"], case


@criterion(9, "verify-all exits 0 with exactly the three documented flags")
def test_c09_flags():
    reports = checks.run_suite("verify-all")
    flags = sorted(r.name for r in reports if r.status == checks.FLAG)
    failed = [r.name for r in reports if r.status == checks.FAIL]
    assert checks.exit_status(reports) == 0, f"failed: {failed}"
    expected = sorted(["lemma-omits-trivial-subgroup", "subgroup-labels", "kstar-display"])
    assert flags == expected, f"flags raised: {flags}"


@criterion(10, "field kernel: 1000 identities, exact and embedded")
def test_c10_field():
    rng = random.Random(10)
    tiny = 2.0**-100
    with mp.workprec(256):
        for _ in range(1000):
            a, b, c = random_elem(rng), random_elem(rng), random_elem(rng)
            assert (a + b) * c == a * c + b * c
            assert (a * b) * c == a * (b * c)
            if not b.is_zero():
                assert (a / b) * b == a
            ea, eb, eab = embed(a, 128), embed(b, 128), embed(a * b, 128)
            slack = abs(ea.value) * eb.radius + abs(eb.value) * ea.radius + ea.radius * eb.radius + tiny
            assert eab.close_to(ea.value * eb.value, slack)
            esum = embed(a + b, 128)
            assert esum.close_to(ea.value + eb.value, ea.radius + eb.radius + tiny)


ALL = [v for k, v in sorted(globals().items()) if k.startswith("test_c")]


def main() -> int:
    for fn in ALL:
        try:
            fn()
        except AssertionError:
            pass
    for n in sorted(RESULTS):
        status, text = RESULTS[n]
        print(f"criterion {n:>2}: {status}  {text}")
    return 0 if all(s == "PASS" for s, _ in RESULTS.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
