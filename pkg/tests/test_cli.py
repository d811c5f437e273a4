import json

import pytest

from stringtoric.cli import emit, execute, main, parse
from stringtoric.errors import UnsupportedFormat, UsageError


def run(capsysbinary, *argv):
    code = main(list(argv))
    out = capsysbinary.readouterr().out
    return code, out


def run_json(capsysbinary, *argv):
    code, out = run(capsysbinary, *argv)
    return code, json.loads(out)


# -- parsing -------------------------------------------------------------------------


def test_parse_valid_invocations():
    inv = parse(["polytope", "A2", "--word", "1,2,1", "--lambda", "1,1"])
    assert inv.lam == (1, 1) and inv.word == "1,2,1"
    inv = parse(["cone", "C2", "--word", "1,2,1,2", "--provider", "builtin"])
    assert inv.provider == "builtin"


@pytest.mark.parametrize("argv,flag", [
    (["polytope", "A2", "--word", "1,1,2"], "--word"),
    (["polytope", "A2", "--word", "all", "--lambda", "1,1"], "--word"),
    (["polytope", "A2", "--lambda", "1"], "--lambda"),
    (["polytope", "A2", "--lambda", "1,-1"], "--lambda"),
    (["polytope", "A2"], "--lambda"),
    (["polytope", "A2", "--word", "1,2,4", "--lambda", "1,1"], "--word"),
    (["cone", "C2"], "--word"),
    (["polytope", "A2", "--partition", "1,2,0"], "--partition"),
    (["census", "A2", "--lambda", "1,1", "--sample", "0"], "--sample"),
    (["cone", "A2", "--provider", "external"], "--cone-file"),
    (["e6", "--n", "0"], "--n"),
])
def test_usage_errors_name_the_flag(argv, flag):
    with pytest.raises(UsageError, match=flag):
        parse(argv)


def test_unknown_command_and_system():
    with pytest.raises(UsageError):
        parse(["frobnicate", "A2"])
    with pytest.raises(UsageError, match="system"):
        parse(["info", "Q7"])


def test_partition_is_converted_to_fundamental_coordinates():
    assert parse(["polytope", "A2", "--partition", "2,1,0"]).lam == (1, 1)
    assert parse(["polytope", "A3", "--partition", "3,1,1,0"]).lam == (2, 0, 1)


def test_usage_exit_code(capsysbinary):
    code, _ = run(capsysbinary, "polytope", "A2", "--word", "1,1,2", "--lambda", "1,1")
    assert code == 2


# -- commands ------------------------------------------------------------------------


def test_info(capsysbinary):
    code, rep = run_json(capsysbinary, "info", "E6")
    assert code == 0 and rep["schema"] == "spw-report/1"
    assert rep["result"]["positive_roots"] == 36
    assert rep["result"]["minuscule"] == [[0, 0, 0, 0, 0, 1], [0, 0, 0, 0, 1, 0]]


def test_polytope_report(capsysbinary):
    code, rep = run_json(capsysbinary, "polytope", "A2", "--word", "1,2,1", "--lambda", "1,1")
    res = rep["result"]
    assert code == 0
    assert res["provenance"] == "builtin-GT-A"
    assert (res["vertices"], res["facets"], res["lattice_points"]) == (7, 6, 8)
    assert res["integral"] and res["highest_weight_vertex"] == ["1", "2", "1"]


def test_fractional_weights_are_printed_as_fractions(capsysbinary):
    code, rep = run_json(capsysbinary, "polytope", "A2", "--lambda", "1/2,0")
    assert code == 0
    assert rep["input"]["lambda"] == ["1/2", "0"]
    assert not rep["result"]["integral"]
    assert any("/" in x for v in rep["result"]["vertex_list"] for x in v)


def test_census_a2_csv(capsysbinary):
    code, out = run(capsysbinary, "census", "A2", "--lambda", "1,1", "--format", "csv")
    lines = out.decode().splitlines()
    assert code == 0
    assert lines[0] == "word,provenance,vertices,facets,lattice_points,integral"
    assert lines[1:] == ["1 2 1,builtin-GT-A,7,6,8,true", "2 1 2,empirical-certified,7,6,8,true"]


def test_census_sample_includes_standard_word(capsysbinary):
    code, rep = run_json(capsysbinary, "census", "A3", "--lambda", "1,0,0", "--sample", "3")
    words = [r["word"] for r in rep["result"]["rows"]]
    assert code == 0 and len(words) == 3 and words[0] == [1, 2, 1, 3, 2, 1]


def test_census_with_worker_pool_matches_serial(capsysbinary):
    _, serial = run(capsysbinary, "census", "A2", "--lambda", "2,1")
    _, pooled = run(capsysbinary, "census", "A2", "--lambda", "2,1", "--jobs", "2")
    assert serial == pooled


def test_output_is_byte_identical(capsysbinary):
    argv = ["fiber", "A2", "--word", "2,1,2", "--lambda", "1,1", "--format", "text"]
    assert run(capsysbinary, *argv) == run(capsysbinary, *argv)


def test_timing_only_on_request(capsysbinary):
    _, rep = run_json(capsysbinary, "info", "A2")
    assert "timing" not in rep
    _, rep = run_json(capsysbinary, "info", "A2", "--timing")
    assert "seconds" in rep["timing"]


def test_fiber_report(capsysbinary):
    code, rep = run_json(capsysbinary, "fiber", "A2", "--lambda", "1,1")
    res = rep["result"]
    assert code == 0 and res["all_match"]
    zero = next(f for f in res["fibers"] if f["mu"] == ["0", "0"])
    assert zero["lattice_points"] == zero["multiplicity"] == 2
    assert len(res["extremal_vertices"]) == 6


def test_fan_report(capsysbinary):
    code, rep = run_json(capsysbinary, "fan", "A3", "--word", "1,3,2,3,1,2")
    assert code == 0
    assert rep["result"]["maximal_cones"] == 2 and not rep["result"]["fan_trivial"]


def test_anticanonical_report(capsysbinary):
    code, rep = run_json(capsysbinary, "anticanonical", "C2", "--word", "1,2,1,2")
    res = rep["result"]
    assert code == 0 and res["vertices"] == 12 and res["reflexive"]


def test_crystal_check_report(capsysbinary):
    code, rep = run_json(capsysbinary, "crystal-check", "A3", "--word", "2,1,2,3,2,1", "--lambda", "1,0,1")
    assert code == 0 and rep["result"]["equal"]
    assert rep["result"]["provenance"] == "empirical-certified"


def test_crystal_check_rejects_other_types(capsysbinary):
    code, _ = run(capsysbinary, "crystal-check", "C2", "--word", "1,2,1,2", "--lambda", "1,1")
    assert code == 2


def test_provider_mismatch_is_a_structured_failure(capsysbinary):
    code, rep = run_json(capsysbinary, "polytope", "A3", "--word", "2,1,2,3,2,1", "--lambda", "1,1,1",
                         "--provider", "builtin")
    assert code == 1 and rep["error"]["type"] == "ProviderMismatch"


def test_budget_exit_code(capsysbinary):
    code, rep = run_json(capsysbinary, "census", "A3", "--lambda", "1,0,0", "--budget", "words=3")
    assert code == 4 and rep["error"]["type"] == "BudgetExceeded"


# -- PORTA emission ---------------------------------------------------------------------


def test_emit_a2_rho_ieq_has_six_rows(capsysbinary):
    code, out = run(capsysbinary, "emit", "A2", "--word", "1,2,1", "--lambda", "1,1", "--format", "porta")
    lines = out.decode().splitlines()
    assert code == 0 and lines[0] == "DIM = 3"
    assert sum(1 for ln in lines if ln.startswith("(")) == 6


def test_emit_poi_of_polytope(capsysbinary):
    code, out = run(capsysbinary, "polytope", "A2", "--lambda", "1,1", "--format", "porta", "--kind", "poi")
    assert code == 0 and sum(1 for ln in out.decode().splitlines() if ln.startswith("(")) == 7


def test_emit_converts_files(tmp_path, capsysbinary):
    square = tmp_path / "square.poi"
    square.write_text("DIM = 2\n\nCONV_SECTION\n( 1) 0 0\n( 2) 1 0\n( 3) 0 1\n( 4) 1 1\n\nEND\n")
    code, out = run(capsysbinary, "emit", str(square), "--format", "porta", "--kind", "poi")
    assert code == 0 and sum(1 for ln in out.decode().splitlines() if ln.startswith("(")) == 4
    code, out = run(capsysbinary, "emit", str(square), "--format", "porta", "--kind", "ieq")
    assert code == 0 and sum(1 for ln in out.decode().splitlines() if ln.startswith("(")) == 4


def test_emit_empty_polytope_marker(tmp_path, capsysbinary):
    empty = tmp_path / "empty.ieq"
    empty.write_text("DIM = 1\n\nINEQUALITIES_SECTION\n( 1) x1 <= 0\n( 2) -x1 <= -1\n\nEND\n")
    code, out = run(capsysbinary, "emit", str(empty), "--format", "porta", "--kind", "poi")
    assert code == 3 and "INFEASIBLE" in out.decode().splitlines()


def test_porta_not_available_for_census(capsysbinary):
    code, _ = run(capsysbinary, "census", "A2", "--lambda", "1,1", "--format", "porta")
    assert code == 2
    with pytest.raises(UnsupportedFormat):
        emit(execute(parse(["info", "A2"])), "yaml")


# -- external cones ------------------------------------------------------------------------


BAD_CONE = "STRINGCONE v1\ntype A 2\nword 1 2 1\nineq 1 0 0\nineq 0 1 0\nineq 0 0 1\n"
GOOD_CONE = "STRINGCONE v1\ntype A 2\nword 1 2 1\nineq 1 0 0\nineq 0 1 -1\nineq 0 0 1\n"


def test_uncertified_external_cone_is_refused(tmp_path, capsysbinary):
    path = tmp_path / "bad.cone"
    path.write_text(BAD_CONE)
    argv = ["polytope", "A2", "--word", "1,2,1", "--lambda", "1,1", "--provider", "external", "--cone-file", str(path)]
    code, rep = run_json(capsysbinary, *argv)
    assert code == 5 and rep["error"]["type"] == "CertificationFailed"
    code, rep = run_json(capsysbinary, *argv, "--trust-external")
    assert code == 0
    assert rep["input"]["trust_external"] and rep["result"]["trust_external"]
    assert rep["result"]["provenance"] == "external-file"


def test_certified_external_cone_via_config(tmp_path, capsysbinary):
    path = tmp_path / "good.cone"
    path.write_text(GOOD_CONE)
    conf = tmp_path / "run.conf"
    conf.write_text(f"# cone files\nprovider = external\ncone.A2.1,2,1 = {path}\n")
    code, rep = run_json(capsysbinary, "polytope", "A2", "--word", "1,2,1", "--lambda", "1,1", "--config", str(conf))
    assert code == 0
    assert rep["result"]["certification"]["passed"] and rep["result"]["vertices"] == 7
    assert rep["result"]["trust_external"] is False


def test_bad_config_line(tmp_path):
    conf = tmp_path / "bad.conf"
    conf.write_text("just words\n")
    with pytest.raises(UsageError, match="--config"):
        parse(["info", "A2", "--config", str(conf)])
