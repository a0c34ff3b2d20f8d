import math
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.ntheory import primitive_root

from gpsieve.catalog import (
    CatalogError,
    EvaluationError,
    GroupSpec,
    ParseError,
    default_catalog,
    default_values_path,
    evaluate,
    index_of,
    load_catalog,
    load_printed_values,
    parent_order,
    parse_order_expr,
    to_source,
)
from gpsieve.catalog.expr import BinOp, Call, Num
from gpsieve.catalog.families import (
    CONSTRUCTORS,
    cyclotomic_value,
    prime_power,
    q_power_minus_one,
)
from gpsieve.factored import factor, factored_factorial
from gpsieve.scan import matches_printed


def ev(src):
    return evaluate(parse_order_expr(src)).value


# -- parser ------------------------------------------------------------------

@pytest.mark.parametrize(
    "src, value",
    [
        ("fact(11)", 39916800),
        ("psl(2,13)", 1092),
        ("fact(5)/fact(5)", 1),
        ("2^3^2", 512),
        ("2*3^2", 18),
        ("(2*3)^2", 36),
        ("24/4/2", 3),
        ("24/(4/2)", 12),
        ("gcd(12, 18)", 6),
        ("gcd(fact(6), 2^10, 48)", 16),
        (" sym( 5 ) ", 120),
    ],
)
def test_evaluate_examples(src, value):
    assert ev(src) == value


@pytest.mark.parametrize(
    "src, offset",
    [("psl(2,", 6), ("2 ** 3", 3), ("fact(3))", 7), ("", 0), ("3 + 4", 2), ("(2", 2)],
)
def test_syntax_errors_carry_offsets(src, offset):
    with pytest.raises(ParseError) as exc:
        parse_order_expr(src)
    assert exc.value.offset == offset


def test_unknown_constructor():
    with pytest.raises(ParseError, match="unknown constructor 'foo'") as exc:
        parse_order_expr("2 * foo(3)")
    assert exc.value.offset == 4


def test_inexact_quotient_fails_loudly():
    with pytest.raises(EvaluationError, match="inexact"):
        ev("fact(5)/7")


@pytest.mark.parametrize("src", ["psl(2,6)", "mathieu(13)", "psp(3,2)", "alt(1)", "psl(2)", "0"])
def test_bad_constructor_arguments(src):
    with pytest.raises(EvaluationError):
        ev(src)


_names = st.sampled_from(["fact", "sym", "alt", "gcd"])
_trees = st.recursive(
    st.integers(1, 50).map(Num),
    lambda sub: st.one_of(
        st.tuples(st.sampled_from("*/^"), sub, sub).map(lambda t: BinOp(*t)),
        st.tuples(_names, st.lists(sub, min_size=1, max_size=3)).map(
            lambda t: Call(t[0], tuple(t[1]))
        ),
    ),
    max_leaves=12,
)


@given(_trees)
def test_pretty_print_round_trip(tree):
    assert parse_order_expr(to_source(tree)) == tree


def test_round_trip_shipped_expressions():
    for g in default_catalog():
        assert parse_order_expr(to_source(g.tree)) == g.tree


# -- family orders -----------------------------------------------------------

def test_family_examples():
    assert ev("mathieu(22)") == 443520
    assert ev("sym(5)") == 120
    assert ev("pgammal(2,16)") == 16320
    assert ev("mathieu(24)") == 244823040


def _direct_gl(d, q):
    return math.prod(q**d - q**i for i in range(d))


def _direct_gu(d, q):
    return q ** (d * (d - 1) // 2) * math.prod(q**i - (-1) ** i for i in range(1, d + 1))


@pytest.mark.parametrize("d, q", [(d, q) for d in range(1, 7) for q in (2, 3, 4, 5, 7, 8, 9, 16, 25, 27)])
def test_linear_families_against_direct_formulas(d, q):
    p, e = prime_power(q)
    gl = _direct_gl(d, q)
    sl = gl // (q - 1)
    assert ev(f"pgl({d},{q})") == sl
    assert ev(f"psl({d},{q})") == sl // math.gcd(d, q - 1)
    assert ev(f"pgammal({d},{q})") == sl * e
    assert ev(f"psigmal({d},{q})") == sl // math.gcd(d, q - 1) * e
    assert ev(f"agl({d},{q})") == q**d * gl
    assert ev(f"asl({d},{q})") == q**d * sl


@pytest.mark.parametrize("d, q", [(d, q) for d in (2, 3, 4) for q in (2, 3, 4, 5, 7, 8, 9)])
def test_unitary_families_against_direct_formulas(d, q):
    pgu = _direct_gu(d, q) // (q + 1)
    assert ev(f"psu({d},{q})") == pgu // math.gcd(d, q + 1)
    assert ev(f"pgammau({d},{q})") == pgu * 2 * prime_power(q)[1]


@pytest.mark.parametrize(
    "src, order",
    [
        ("psp(4,3)", 25920),
        ("psp(6,2)", 1451520),
        ("psp(4,2)", 720),
        ("psu(3,3)", 6048),
        ("psu(3,5)", 126000),
        ("psl(4,3)", 6065280),
        ("psl(3,4)", 20160),
        ("psl(5,2)", 9999360),
        ("mathieu(11)", 7920),
        ("mathieu(12)", 95040),
        ("mathieu(23)", 10200960),
        ("mathieu(10)", 720),
    ],
)
def test_standard_orders(src, order):
    assert ev(src) == order


def _projective_line_group(p, with_scalars):
    # points 0..p-1 and infinity = p
    def perm(f):
        return Permutation([f(x) for x in range(p + 1)])

    inf = p
    shift = perm(lambda x: inf if x == inf else (x + 1) % p)
    invert = perm(lambda x: 0 if x == inf else inf if x == 0 else (-pow(x, -1, p)) % p)
    gens = [shift, invert]
    g = primitive_root(p)
    a = g if with_scalars else g * g % p
    gens.append(perm(lambda x: inf if x == inf else a * x % p))
    return PermutationGroup(gens)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_psl_pgl_against_permutation_groups(p):
    assert _projective_line_group(p, False).order() == ev(f"psl(2,{p})")
    assert _projective_line_group(p, True).order() == ev(f"pgl(2,{p})")


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17])
def test_agl1_against_permutation_group(p):
    shift = Permutation([(x + 1) % p for x in range(p)])
    scale = Permutation([primitive_root(p) * x % p for x in range(p)])
    assert PermutationGroup([shift, scale]).order() == ev(f"agl(1,{p})")


def test_cyclotomic_split():
    for q in (2, 3, 10, 27, 97):
        for i in range(1, 13):
            assert q_power_minus_one(q, i).value == q**i - 1
    assert cyclotomic_value(12, 10) == 10**4 - 10**2 + 1


def test_prime_power():
    assert prime_power(2**4) == (2, 4)
    assert prime_power(13) == (13, 1)
    for bad in (1, 6, 12):
        with pytest.raises(ValueError):
            prime_power(bad)


def test_constructor_set():
    assert set(CONSTRUCTORS) == {
        "fact", "sym", "alt", "mathieu", "psl", "pgl", "pgammal", "psigmal",
        "psp", "psu", "pgammau", "agl", "asl",
    }


# -- catalog file ------------------------------------------------------------

def test_shipped_catalog_size():
    cat = default_catalog()
    assert len(cat) == 115
    assert sum(g.degree >= 14 for g in cat) == 87


def test_index_examples():
    cat = {g.key: g for g in default_catalog()}
    assert index_of(cat[("PSL(2,13)", 14, "A")]).value == 39916800
    assert index_of(cat[("17:8", 17, "A")]).value == 1307674368000
    assert index_of(GroupSpec("Sym(20)", 20, "S", "sym(20)")).value == 1


def test_every_order_divides_parent():
    for g in default_catalog():
        assert g.order.divides(parent_order(g)), g.label
        if g.parent == "A":
            assert g.order.divides(factored_factorial(g.degree) / factor(2))


def test_u_matches_printed_values():
    values = load_printed_values(default_values_path())
    checked = 0
    for g in default_catalog():
        if g.degree < 14:
            continue
        assert matches_printed(index_of(g), values[g.key].u), g.label
        checked += 1
    assert checked == len(values) == 87


def test_load_examples(tmp_path: Path):
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    assert load_catalog(empty) == []

    one = tmp_path / "one.txt"
    one.write_text("# comment\n\nM(24), 24, A, mathieu(24)  # trailing\n", encoding="utf-8")
    (g,) = load_catalog(one)
    assert (g.name, g.degree, g.parent, g.order.value) == ("M(24)", 24, "A", 244823040)


def test_names_with_commas(tmp_path: Path):
    f = tmp_path / "c.txt"
    f.write_text("L(2, 2^4):4 = PGammaL(2, 2^4), 17, A, pgammal(2,2^4)\n")
    (g,) = load_catalog(f)
    assert g.name == "L(2, 2^4):4 = PGammaL(2, 2^4)"
    assert g.order.value == 16320


@pytest.mark.parametrize(
    "body, lineno",
    [
        ("M(24), 24, A, mathieu(24)\nbroken line\n", 2),
        ("# c\nX, 24, Q, 5\n", 2),
        ("X, 24, A, 5\nX, 24, A, 5\n", 2),
        ("X, 3, A, 5\n", 1),
        ("X, 24, A, psl(2,\n", 1),
        ("X, 24, A, bogus(2)\n", 1),
    ],
)
def test_load_errors_report_line(tmp_path: Path, body, lineno):
    f = tmp_path / "bad.txt"
    f.write_text(body)
    with pytest.raises(CatalogError) as exc:
        load_catalog(f)
    assert exc.value.lineno == lineno


def test_non_dividing_order_is_catalog_error():
    with pytest.raises(CatalogError):
        index_of(GroupSpec("too big", 14, "A", "fact(14)"))
