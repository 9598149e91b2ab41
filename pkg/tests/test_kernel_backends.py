"""The compiled kernel must agree with the pure-Python one bit for bit."""

import random
from fractions import Fraction

import pytest

from jetfibers import _kernel_py as pure
from jetfibers.kernel import BACKEND

compiled = pytest.importorskip(
    "jetfibers._kernel", reason="compiled kernel not built"
)


def _random_terms(rng, width, nterms, max_exp=3):
    out = {}
    for _ in range(nterms):
        mono = tuple(rng.randint(0, max_exp) for _ in range(width))
        coeff = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if coeff:
            out[mono] = coeff
    return {m: c for m, c in out.items() if c}


def test_selected_backend_is_compiled():
    assert BACKEND == "compiled"


def test_order_constants_match():
    assert (pure.GREVLEX, pure.LEX, pure.BLOCK) == (
        compiled.GREVLEX,
        compiled.LEX,
        compiled.BLOCK,
    )


def test_monomial_ops_agree():
    rng = random.Random(3)
    for _ in range(200):
        width = rng.randint(1, 6)
        a = tuple(rng.randint(0, 4) for _ in range(width))
        b = tuple(rng.randint(0, 4) for _ in range(width))
        assert pure.mono_mul(a, b) == compiled.mono_mul(a, b)
        assert pure.mono_div(a, b) == compiled.mono_div(a, b)
        assert pure.mono_lcm(a, b) == compiled.mono_lcm(a, b)
        assert pure.mono_deg(a) == compiled.mono_deg(a)
        for kind in (0, 1, 2):
            split = rng.randint(0, width)
            assert pure.mono_cmp(a, b, kind, split) == compiled.mono_cmp(
                a, b, kind, split
            )


def test_term_arithmetic_agrees():
    rng = random.Random(5)
    for _ in range(40):
        width = rng.randint(1, 5)
        a = _random_terms(rng, width, rng.randint(0, 6))
        b = _random_terms(rng, width, rng.randint(1, 6))
        c = Fraction(rng.randint(1, 5), rng.randint(1, 3))
        assert pure.add_scaled(a, b, c) == compiled.add_scaled(a, b, c)
        assert pure.mul_terms(a, b) == compiled.mul_terms(a, b)
        cap = rng.randint(0, 6)
        assert pure.mul_terms(a, b, 0, cap) == compiled.mul_terms(a, b, 0, cap)


def test_normal_form_agrees():
    rng = random.Random(9)
    for _ in range(30):
        width = rng.randint(2, 4)
        p = _random_terms(rng, width, rng.randint(1, 6))
        gens = []
        leads = []
        lcs = []
        for _ in range(rng.randint(1, 3)):
            g = _random_terms(rng, width, rng.randint(1, 4))
            if not g:
                continue
            lead, lc = pure.lead_term(g, 0, 0)
            g = {m: c / lc for m, c in g.items()}
            gens.append(g)
            leads.append(lead)
            lcs.append(Fraction(1))
        if not gens:
            continue
        assert pure.normal_form(p, gens, leads, lcs, 0, 0) == compiled.normal_form(
            p, gens, leads, lcs, 0, 0
        )


def test_lead_term_agrees():
    rng = random.Random(13)
    for _ in range(60):
        width = rng.randint(1, 5)
        terms = _random_terms(rng, width, rng.randint(1, 8))
        if not terms:
            continue
        for kind in (0, 1, 2):
            split = rng.randint(0, width)
            assert pure.lead_term(terms, kind, split) == compiled.lead_term(
                terms, kind, split
            )
