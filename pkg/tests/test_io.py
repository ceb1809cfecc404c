import json

import pytest

from rsemi import io
from rsemi.algebra import same_algebra
from rsemi.errors import MalformedInputError, NotASemilatticeError, ParseError
from rsemi.fixtures import NAMED, c2, corpus


def test_c2_file(fixtures_dir):
    S = io.parse_algebra(fixtures_dir / "c2.alg")
    assert len(S) == 2 and S.identity == "1"
    assert same_algebra(S, c2())


def test_non_square_table_names_row():
    bad = {"elements": ["x", "y"], "mul": [[0, 1], [1]], "star": [0, 1], "plus": [0, 1]}
    with pytest.raises(ParseError, match="row 1"):
        io.parse_algebra(json.dumps(bad))


def test_syntax_error_reports_position():
    with pytest.raises(ParseError, match=r"<string>:2:\d+"):
        io.parse_algebra('{"elements": ["x"],\n "mul" [[0]]}')


def test_index_out_of_range_is_semantic():
    bad = {"elements": ["x"], "mul": [[3]], "star": [0], "plus": [0]}
    with pytest.raises(MalformedInputError) as exc:
        io.parse_algebra(bad)
    assert not isinstance(exc.value, ParseError)


def test_missing_field():
    with pytest.raises(ParseError, match="star"):
        io.parse_algebra({"elements": ["x"], "mul": [[0]], "plus": [0]})


@pytest.mark.parametrize("name", sorted(corpus()))
def test_round_trip_is_byte_stable(fixtures_dir, name):
    text = (fixtures_dir / name).read_text()
    kind = io.kind_of(text) if name != "witnesses.json" else "witnesses"
    if kind == "algebra":
        again = io.serialize_algebra(io.parse_algebra(text))
    elif kind == "action":
        data = json.loads(text)
        again = io.dumps(io.action_to_dict(io.parse_action(text), data.get("generators_only", False)))
    elif kind == "double":
        again = io.dumps(io.double_action_to_dict(io.parse_double_action(text)))
    else:
        data = json.loads(text)
        again = io.dumps({k: io.action_to_dict(io.parse_action(v)) for k, v in data.items()})
    assert again == text


def test_fixture_corpus_is_current(fixtures_dir):
    for name, text in corpus().items():
        assert (fixtures_dir / name).read_text() == text, name


def test_key_order_is_normalized():
    d = io.algebra_to_dict(c2())
    shuffled = json.dumps(dict(reversed(list(d.items()))))
    assert io.serialize_algebra(io.parse_algebra(shuffled)) == io.serialize_algebra(c2())


def test_named_fixtures_round_trip():
    for make in NAMED.values():
        S = make()
        T = io.parse_algebra(io.serialize_algebra(S))
        assert len(T) == len(S)


def test_semilattice_formats():
    Y = io.parse_semilattice({"elements": ["0", "1", "2"], "leq": [["0", "1"], ["1", "2"]]})
    assert Y.meet("0", "2") == "0"
    Z = io.parse_semilattice({"elements": ["0", "1"], "meet": [[0, 0], [0, 1]]})
    assert Z.leq("0", "1") and not Z.leq("1", "0")
    assert io.semilattice_to_dict(Z) == {"elements": ["0", "1"], "leq": [["0", "1"]]}
    with pytest.raises(NotASemilatticeError):
        io.parse_semilattice({"elements": ["x", "y"], "leq": []})


def test_action_with_lattice_path(tmp_path):
    (tmp_path / "y.json").write_text(json.dumps({"elements": ["0", "1"], "leq": [["0", "1"]]}))
    act = {"monoid": {"table": {"elements": ["1"], "mul": [[0]], "identity": 0}}, "lattice": "y.json",
           "act": [["1", "0", "0"], ["1", "1", "1"]]}
    (tmp_path / "a.act").write_text(json.dumps(act))
    pa = io.parse_action(tmp_path / "a.act")
    assert pa.act("1", "1") == "1"


def test_kind_of():
    assert io.kind_of({"elements": [], "mul": []}) == "algebra"
    assert io.kind_of({"act": []}) == "action"
    assert io.kind_of({"star": [], "bullet": []}) == "double"
    with pytest.raises(ParseError):
        io.kind_of({"foo": 1})
