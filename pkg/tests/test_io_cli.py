import csv
import io
import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affhit import cli
from affhit.errors import InputError
from affhit.family import AffineFamily, Interval, VPolytope
from affhit.io import (
    adapt_from_json,
    adapt_to_json,
    family_from_json,
    family_to_json,
    load_family,
    points_from_json,
    points_to_json,
)
from affhit.plot import member_outline

import families


@pytest.fixture
def write(tmp_path):
    def _write(name, doc):
        path = tmp_path / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(path)

    return _write


def run(capsys, *argv):
    code = cli.run([str(a) for a in argv])
    out = capsys.readouterr().out
    try:
        return code, json.loads(out)
    except json.JSONDecodeError:
        return code, out


# -- serialization -------------------------------------------------------------------------


@given(st.integers(0, 10_000), st.integers(1, 5), st.integers(1, 3), st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_family_round_trip(seed, m, d, p):
    fam = families.random_family(families.seeded(seed), m, d, p)
    again = family_from_json(json.loads(json.dumps(family_to_json(fam))))
    assert again == fam


def test_rationals_serialize_as_strings(f2):
    doc = family_to_json(f2)
    assert doc["domain"] == {"interval": ["0", "1"]}
    assert all(isinstance(v, str) for v in doc["b0"])


def test_vertex_domain_round_trip():
    fam = families.random_family(families.seeded(2), 3, 2, 2)
    assert isinstance(fam.domain, VPolytope)
    assert family_from_json(family_to_json(fam)) == fam


def test_adapt_round_trip_with_box(f4_boxed):
    assert adapt_from_json(json.loads(json.dumps(adapt_to_json(f4_boxed)))) == f4_boxed


def test_adapt_round_trip_with_first_stage():
    inst = families.random_first_stage_instance(families.seeded(3), 3, 2, 1, 2)
    assert adapt_from_json(adapt_to_json(inst)) == inst


def test_single_objective_vector_accepted(f4):
    doc = adapt_to_json(f4)
    doc["c_s1"] = doc["c_s1"][0]
    assert adapt_from_json(doc) == f4


def test_points_round_trip():
    pts = [(F(1, 3), F(-2)), (F(0), F(7, 5))]
    assert points_from_json(points_to_json(pts)) == pts


def test_dimension_mismatch_rejected(f1):
    doc = family_to_json(f1)
    doc["d"] = 2
    with pytest.raises(InputError):
        family_from_json(doc)


def test_bad_rational_rejected(f1):
    doc = family_to_json(f1)
    doc["b0"][0] = "one half"
    with pytest.raises(InputError):
        family_from_json(doc)


def test_malformed_file(write):
    with pytest.raises(InputError):
        load_family(write("bad.json", "{not json"))


# -- subcommands ----------------------------------------------------------------------------


def test_hitsize_f1(capsys, write, f1):
    code, out = run(capsys, "hitsize", "--input", write("f1.json", family_to_json(f1)), "--kmax", 5, "--engine", "exact")
    assert code == 0
    assert out["k"] == 2 and out["points"] == [["1"], ["2"]] and out["breakpoints"] == ["1", "2"]


def test_sigma_f2(capsys, write, f2):
    code, out = run(capsys, "sigma", "--input", write("f2.json", family_to_json(f2)), "--lambda", 0, "--engine", "exact")
    assert code == 0
    assert out["sigma"] == {"poly": [-1, 0, 2], "interval": ["11/16", "3/4"], "approx": "0.707106781187"}


def test_sigma_bisect_bracket(capsys, write, f2):
    path = write("f2.json", family_to_json(f2))
    code, out = run(capsys, "sigma", "--input", path, "--lambda", 0, "--engine", "bisect", "--eps", "1/1024")
    assert code == 0 and out["kind"] == "certified"
    assert F(out["sigma"]["hi"]) - F(out["sigma"]["lo"]) <= F(1, 1024)


def test_decide_f3_not_polytope(capsys, write, f3):
    code, out = run(capsys, "decide", "--input", write("f3.json", family_to_json(f3)), "--k", 3)
    assert code == 3 and out["error"] == "NotPolytope"


def test_decide_true_and_false(capsys, write, f1):
    path = write("f1.json", family_to_json(f1))
    assert run(capsys, "decide", "--input", path, "--k", 2)[0] == 0
    code, out = run(capsys, "decide", "--input", path, "--k", 1)
    assert code == 1 and out["decision"] is False


def test_hitsize_bounded_f3_reports_empty_member(capsys, write, f3_bounded):
    code, out = run(capsys, "hitsize", "--input", write("f3b.json", family_to_json(f3_bounded)))
    assert code == 1 and out["reason"] == "empty member"


def test_eval(capsys, write, f1):
    code, out = run(capsys, "eval", "--input", write("f1.json", family_to_json(f1)), "--omega", 2)
    assert code == 0 and out["b"] == ["-2", "3"] and out["A"] == [["-1"], ["1"]]


def test_eval_wrong_dimension_is_input_error(capsys, write, f1):
    assert run(capsys, "eval", "--input", write("f1.json", family_to_json(f1)), "--omega", "1,2")[0] == 2


def test_dual_round_trips_through_cli(capsys, write, f1):
    code, out = run(capsys, "dual", "--input", write("f1.json", family_to_json(f1)))
    assert code == 0 and out["domain"] == {"unrestricted": 1}
    assert (out["d"], out["p"]) == (1, 1)


def test_dual_interval(capsys, write, f1):
    path = write("f1.json", family_to_json(f1))
    assert run(capsys, "dual-interval", "--input", path, "--x", 1)[1]["interval"] == ["0", "1"]
    assert run(capsys, "dual-interval", "--input", path, "--x", 5)[1]["empty"] is True


def test_hit1(capsys, write, f1):
    code, out = run(capsys, "hit1", "--input", write("f1.json", family_to_json(f1)))
    assert code == 1 and out["feasible"] is False
    unit = AffineFamily(f1.a, f1.b, Interval(0, 1))
    code, out = run(capsys, "hit1", "--input", write("u.json", family_to_json(unit)))
    assert code == 0 and out["witness"] == ["1"]


def test_verify_exit_codes(capsys, write, f1):
    path = write("f1.json", family_to_json(f1))
    good = write("good.json", points_to_json([(1,), (2,)]))
    bad = write("bad.json", points_to_json([(1,)]))
    assert run(capsys, "verify", "--input", path, "--points", good)[0] == 0
    code, out = run(capsys, "verify", "--input", path, "--points", bad)
    assert code == 1 and out["report"] == "gap (1, 2]"


def test_adapt_decide(capsys, write, f4):
    path = write("f4.json", adapt_to_json(f4))
    code, out = run(capsys, "adapt", "decide", "--input", path, "--k", 1, "--t", "1/2")
    assert code == 0 and out["witnesses"] == [["1/2", "1/2"]]
    assert run(capsys, "adapt", "decide", "--input", path, "--k", 1, "--t", "2/5")[0] == 1


def test_adapt_optimize(capsys, write, f4):
    path = write("f4.json", adapt_to_json(f4))
    code, out = run(capsys, "adapt", "optimize", "--input", path, "--k", 2, "--eps", "1/1000")
    assert code == 0
    assert F(out["value"]["lo"]) < F(1, 4) <= F(out["value"]["hi"])


def test_lift(capsys, write):
    inst = families.random_first_stage_instance(families.seeded(1), 2, 2, 3, 1)
    code, out = run(capsys, "lift", "--input", write("l.json", adapt_to_json(inst)), "--t", 0)
    assert code == 0 and out["dim"] == 11 and len(out["surface"]) == 6


def test_lift_without_first_stage(capsys, write, f4):
    assert run(capsys, "lift", "--input", write("f4.json", adapt_to_json(f4)), "--t", 1)[0] == 3


def test_oracle(capsys, write, f2):
    path = write("f2.json", family_to_json(f2))
    code, out = run(capsys, "oracle", "--input", path, "--resolution", 201, "--lambda", 0)
    assert code == 0 and out["grid_hit_size"] == 2
    lo, hi = F(out["sigma_bracket"]["lo"]), F(out["sigma_bracket"]["hi"])
    assert 2 * lo * lo < 1 < 2 * hi * hi


def test_output_flag_writes_file(capsys, write, tmp_path, f1):
    target = tmp_path / "report.json"
    code = cli.run(["hitsize", "--input", write("f1.json", family_to_json(f1)), "--output", str(target)])
    assert code == 0 and capsys.readouterr().out == ""
    assert json.loads(target.read_text())["k"] == 2


# -- sample-plot ----------------------------------------------------------------------------


def _csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_sample_plot_f2_five_blocks(capsys, write, f2):
    code, out = run(capsys, "sample-plot", "--input", write("f2.json", family_to_json(f2)), "--resolution", 5)
    rows = _csv(out)
    assert code == 0
    assert [r["omega"] for r in rows if r["vertex"] == "0"] == ["0", "1/4", "1/2", "3/4", "1"]
    assert all(r["status"] == "ok" for r in rows)


def test_sample_plot_vertices_match_member(f2):
    # at omega = 0 the member is {x1 >= 0, x1 <= 2, x2 >= 1/2, x2 <= 1}
    outline = member_outline(f2, F(0))
    assert set(outline.vertices) == {(0, F(1, 2)), (2, F(1, 2)), (2, 1), (0, 1)}


def test_single_point_member_has_one_vertex():
    # x = (w, 0) exactly
    fam = AffineFamily.from_arrays(
        [[1, 0], [-1, 0], [0, 1], [0, -1]], [[[0, 0]] * 4], [0, 0, 0, 0], [[1, -1, 0, 0]], (0, 1)
    )
    outline = member_outline(fam, F(1, 3))
    assert outline.status == "ok" and outline.vertices == ((F(1, 3), 0),)


def test_empty_member_is_flagged(capsys, write):
    # 0 <= x1 <= 1/2 - w is empty for w > 1/2
    fam = AffineFamily.from_arrays(
        [[1, 0], [-1, 0], [0, 1], [0, -1]], [[[0, 0]] * 4], ["1/2", 0, 1, 0], [[-1, 0, 0, 0]], (0, 1)
    )
    rows = _csv(run(capsys, "sample-plot", "--input", write("e.json", family_to_json(fam)), "--resolution", 3)[1])
    last = [r for r in rows if r["omega"] == "1"]
    assert len(last) == 1 and last[0]["status"] == "empty" and last[0]["vertex"] == ""


def test_sample_plot_needs_planar_family(capsys, write, f1):
    assert run(capsys, "sample-plot", "--input", write("f1.json", family_to_json(f1)), "--resolution", 3)[0] == 3


# -- input errors ----------------------------------------------------------------------------


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "hitsize", "--input", tmp_path / "nope.json")[0] == 2


def test_malformed_json_exit(capsys, write):
    assert run(capsys, "sigma", "--input", write("bad.json", "[1, 2"), "--lambda", 0)[0] == 2


def test_unknown_flag(capsys, write, f1):
    assert run(capsys, "hitsize", "--input", write("f1.json", family_to_json(f1)), "--bogus", 1)[0] == 2


def test_unknown_subcommand(capsys):
    assert run(capsys, "solve")[0] == 2


def test_lambda_outside_domain(capsys, write, f1):
    assert run(capsys, "sigma", "--input", write("f1.json", family_to_json(f1)), "--lambda", 7)[0] == 2


def test_default_engine_switches_on_row_count():
    class Args:
        engine = None
        eps = None

    assert type(cli._engine(Args, 32)).__name__ == "Exact"
    assert type(cli._engine(Args, 33)).__name__ == "Bisect"
