import json
import subprocess
import sys

from frobclose.cli import JobSpec, dump_report, main, run_job
from frobclose.golden import check_corpus


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def report_of(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json", "-")
    return code, json.loads(out[out.index("{"):])


def test_fclose_hyp4(capsys):
    code, rep = report_of(capsys, "fclose", "--ring", "hyp4_p5.ring", "--ideal", "y^2,z^2")
    assert code == 0
    assert set(rep["result"]["generators"]) == {"y^2", "z^2", "x^3*y*z"}
    assert rep["certified"] is True and rep["schema_version"] == 1


def test_limclose_regular(capsys):
    code, rep = report_of(capsys, "limclose", "--ring", "regular2_p5.ring", "--gens", "x,y")
    assert code == 0
    assert set(rep["result"]["generators"]) == {"x", "y"}


def test_fclose_not_m_primary(capsys):
    code, _, err = run(capsys, "fclose", "--ring", "hyp4_p5.ring", "--ideal", "y^2")
    assert code == 1 and "not m-primary" in err


def test_uncertified_exit_code(capsys):
    code, rep = report_of(capsys, "fclose", "--ring", "hyp4_p5.ring", "--ideal", "y^2,z^2", "--cap-e", "1")
    assert code == 2 and rep["certified"] is False


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "fclose", "--ring", "hyp4_p5.ring", "--ideal", "y^^2")
    assert code == 1 and ("--gens" in err or "--ideal" in err)


def test_ring_file_error_reports_line(tmp_path, capsys):
    bad = tmp_path / "bad.ring"
    bad.write_text("char 5\nvars x y\nrel x^2 + q\n")
    code, _, err = run(capsys, "fedder", "--ring", str(bad))
    assert code == 1 and "bad.ring:3" in err


def test_invariants_commands(capsys):
    _, rep = report_of(capsys, "invariants", "--ring", "hyp4_p5.ring", "--gens", "y^2,z^2")
    assert rep["result"]["mult"] == 16 and rep["result"]["surplus_f"] == 1
    _, rep = report_of(capsys, "invariants", "--ring", "quintic_p2.ring", "--gens", "x,y")
    assert rep["result"]["len_qF_over_q"] == 3
    _, rep = report_of(capsys, "invariants", "--ring", "regular2_p5.ring", "--gens", "x,y^2")
    assert all(rep["result"][k] == 0 for k in ("surplus_buchsbaum", "surplus_f", "surplus_f_alt"))


def test_probe_fedder_corgor(capsys):
    code, rep = report_of(capsys, "probe", "--quantity", "surplus_f", "--ring", "quintic_p2.ring",
                          "--samples", "6", "--seed", "1")
    assert code == 0 and rep["result"]["verdict"] == "non_constant"
    _, rep = report_of(capsys, "fedder", "--ring", "sr4_p2.ring")
    assert rep["result"]["f_pure"] is True
    code, rep = report_of(capsys, "corgor", "--ring", "hyp4_p5.ring")
    assert code == 0 and rep["result"]["found"] is True


def test_other_commands(capsys):
    _, rep = report_of(capsys, "length", "--ring", "quintic_p2.ring", "--ideal", "x,y", "--outer", "x,y,z^2")
    assert rep["result"]["quotient_length"] == 3
    _, rep = report_of(capsys, "mult", "--ring", "sr4_p2.ring", "--gens", "x+z,y+w")
    assert rep["result"]["multiplicity"] == 2 and rep["result"]["method"].startswith("lech")
    _, rep = report_of(capsys, "tprobe", "--ring", "quintic_p2.ring", "--ideal", "x,y",
                       "--element", "z", "--test-element", "z^3")
    assert rep["result"]["verdict"] == "not_in_closure"
    _, rep = report_of(capsys, "mcontain", "--ring", "hyp4_p5.ring", "--gens", "y^2,z^2")
    assert rep["result"]["m_qflim_in_q"] is True
    for cmd in ("flim", "limf"):
        code, rep = report_of(capsys, cmd, "--ring", "hyp4_p5.ring", "--gens", "y^2,z^2")
        assert code == 0 and len(rep["result"]["generators"]) == 3


def test_jobspec_round_trip():
    job = JobSpec(command="probe", ring="quintic_p2.ring", quantity="surplus_f", seed=1, samples=4,
                  config=["closure.cap_e=4"])
    report, _ = run_job(job)
    again = JobSpec.from_dict(json.loads(dump_report(report))["job"])
    assert again == job


def test_reports_are_stable():
    job = JobSpec(command="probe", ring="hyp4_p5.ring", quantity="surplus_f", seed=3, samples=4)
    a, _ = run_job(job)
    b, _ = run_job(JobSpec.from_dict(job.to_dict()))
    a.pop("timing"), b.pop("timing")
    assert dump_report(a) == dump_report(b)


def test_json_file_output(tmp_path, capsys):
    out = tmp_path / "r.json"
    code = main(["fedder", "--ring", "cubic_p2.ring", "--json", str(out)])
    capsys.readouterr()
    assert code == 0 and json.loads(out.read_text())["result"]["f_pure"] is False


def test_bundled_corpus_passes(capsys):
    assert check_corpus(None, []) == 0
    assert "0 failure(s)" in capsys.readouterr().out


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "frobclose.cli", "fedder", "--ring", "hyp4_p5.ring"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "False" in res.stdout
