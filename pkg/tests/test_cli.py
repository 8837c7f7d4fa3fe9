import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from coalgmin.cli import main
from coalgmin.document import dump, dump_document, load_document, parse_coalgebra
from coalgmin.errors import ParseError, ValidationError
from coalgmin.functors import Weights
from coalgmin.oracles import STANDARD_SPECS, random_coalgebra

from conftest import FIXTURES

GOLDEN = FIXTURES / "golden"

GOLDEN_RUNS = [
    (["simple", "fig4a.json"], "fig4a.simple.json"),
    (["simple", "fig4b.json"], "fig4b.simple.json"),
    (["reach", "counterexample-codomain.json"], "counterexample-codomain.reach.json"),
    (["wellpointed", "cancel4.json"], "cancel4.simple-first.json"),
    (["wellpointed", "--order", "reach-first", "cancel4.json"], "cancel4.reach-first.json"),
    (["unravel", "--depth", "3", "fig6a.json"], "fig6a.unravel.json"),
    (["unravel", "--depth", "5", "fig6b.json"], "fig6b.unravel5.json"),
]


def run(capsys, *args):
    code = main([str(FIXTURES / a) if a.endswith(".json") else a for a in args])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("args,golden", GOLDEN_RUNS)
def test_golden_outputs(capsys, args, golden):
    code, out, _ = run(capsys, *args)
    assert code == 0
    assert out == (GOLDEN / golden).read_text(encoding="utf-8")


@pytest.mark.parametrize("golden", sorted(p.name for p in GOLDEN.glob("*.json")))
def test_round_trip_canonical(golden):
    text = (GOLDEN / golden).read_text(encoding="utf-8")
    assert dump(load_document(text)) == text


@given(st.sampled_from(sorted(STANDARD_SPECS)), st.integers(1, 6), st.integers(0, 10**6))
def test_round_trip_generated(kind, n, seed):
    text = dump_document(random_coalgebra(STANDARD_SPECS[kind], n, seed))
    assert dump(load_document(text)) == text


def test_minimal_document():
    c = parse_coalgebra('{"functor": {"kind": "powerset"}, "states": ["x"], "structure": {"x": []}}')
    assert c.size == 1 and c.structure == (frozenset(),)


def test_fig4b_fixture_parses_exactly():
    c = parse_coalgebra((FIXTURES / "fig4b.json").read_text())
    assert c.spec.monoid == "rational"
    assert c.structure == (Weights({1: 4, 2: -7}), Weights({2: 5}), Weights({2: 5}))


def test_rational_strings():
    doc = '{"functor": {"kind": "monoid", "monoid": "rational"}, "states": ["x"], "structure": {"x": {"x": "2/4"}}}'
    c = parse_coalgebra(doc)
    assert '"s0": "1/2"' in dump_document(c)


def test_weight_on_undeclared_state():
    doc = '{"functor": {"kind": "monoid", "monoid": "int"}, "states": ["x"], "structure": {"x": {"y": 1}}}'
    with pytest.raises(ValidationError, match="undeclared"):
        parse_coalgebra(doc)


def test_float_weight_rejected():
    doc = '{"functor": {"kind": "monoid", "monoid": "rational"}, "states": ["x"], "structure": {"x": {"x": 0.5}}}'
    with pytest.raises(ValidationError):
        parse_coalgebra(doc)


def test_negative_bag_weight_rejected():
    doc = '{"functor": {"kind": "monoid", "monoid": "nat"}, "states": ["x"], "structure": {"x": {"x": -1}}}'
    with pytest.raises(ValidationError):
        parse_coalgebra(doc)


def test_syntax_error_has_position():
    with pytest.raises(ParseError) as info:
        parse_coalgebra('{\n  "functor": ,\n}')
    assert info.value.line == 2


def test_partial_dfa_rejected():
    doc = {
        "functor": {"kind": "dfa", "alphabet": ["a", "b"]},
        "states": ["x"],
        "structure": {"x": {"accept": True, "next": {"a": "x"}}},
    }
    with pytest.raises(ValidationError, match="no transition"):
        parse_coalgebra(json.dumps(doc))


def test_orders_agree_command(capsys):
    code, out, _ = run(capsys, "orders-agree", "cancel4.json")
    assert (code, out) == (0, "false\n")
    code, out, _ = run(capsys, "orders-agree", "fig4a.json")
    assert (code, out) == (0, "true\n")


def test_reach_first_warns(capsys):
    _, _, err = run(capsys, "wellpointed", "--order", "reach-first", "cancel4.json")
    assert "not well-pointed" in err


def test_check_hom_command(capsys):
    code, out, _ = run(
        capsys, "check-hom", "counterexample-domain.json", "counterexample-codomain.json",
        "counterexample-hom.json",
    )
    assert (code, out) == (0, "true\n")
    code, out, _ = run(
        capsys, "check-hom", "counterexample-domain.json", "counterexample-codomain.json",
        '{"a": "a", "b1": "a", "b2": "b"}',
    )
    assert (code, out) == (0, "false\n")


def test_equiv_command(capsys):
    assert run(capsys, "equiv", "fig4a.json", "q0", "q1", "--oracle")[:2] == (0, "true\n")
    assert run(capsys, "equiv", "fig4a.json", "q0", "q2")[:2] == (0, "false\n")
    assert run(capsys, "equiv", "fig4a.json", "q0", "nope")[0] == 1


def test_oracle_flag(capsys):
    assert run(capsys, "simple", "fig4b.json", "--oracle")[0] == 0
    assert run(capsys, "reach", "cancel4.json", "--oracle")[0] == 0


def test_oracle_too_large(capsys, tmp_path):
    path = tmp_path / "big.json"
    path.write_text(dump_document(random_coalgebra(STANDARD_SPECS["powerset"], 7, 1)))
    code, _, err = run(capsys, "simple", str(path), "--oracle")
    assert code == 1 and "oracle bound" in err


def test_unravel_wrong_functor(capsys):
    code, _, err = run(capsys, "unravel", "--depth", "2", "fig4a.json")
    assert code == 1 and "bag" in err


def test_reach_needs_point(capsys, tmp_path):
    path = tmp_path / "unpointed.json"
    path.write_text('{"functor": {"kind": "powerset"}, "states": ["x"], "structure": {"x": []}}')
    assert run(capsys, "reach", str(path))[0] == 1


def test_output_file_and_inputs_untouched(capsys, tmp_path):
    src = FIXTURES / "fig4a.json"
    before = src.read_bytes()
    out = tmp_path / "out.json"
    assert main(["simple", str(src), "-o", str(out)]) == 0
    assert out.read_text() == (GOLDEN / "fig4a.simple.json").read_text()
    assert src.read_bytes() == before


def test_gen_uses_env_seed(capsys, monkeypatch):
    monkeypatch.setenv("COALGMIN_SEED", "42")
    assert main(["gen", "--functor", "dfa", "--states", "5"]) == 0
    out, _ = capsys.readouterr()
    assert out == (GOLDEN / "gen-dfa-5-seed42.json").read_text()


def test_internal_failure_exit_code(capsys, monkeypatch):
    import coalgmin.cli as cli

    monkeypatch.setattr(cli, "reachable_part_oracle", lambda c: frozenset())
    assert run(capsys, "reach", "cancel4.json", "--oracle")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "coalgmin", "orders-agree", str(FIXTURES / "cancel4.json")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "false\n"
