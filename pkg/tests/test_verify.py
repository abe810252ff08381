from __future__ import annotations

import io
import json

import pytest
from conftest import XYZ

from aciverify.ideal import Ideal
from aciverify.instances import random_aci
from aciverify.polynomial import RingContext
from aciverify.verify import (
    RECORD_FIELDS,
    SPEC_VERSION,
    CampaignParams,
    instance_from_ideal,
    run_campaign,
    theorem_bound,
    verify_instance,
)


def test_theorem_bound_examples():
    assert theorem_bound((2, 2), 2) == 3
    assert theorem_bound((2, 3), 2) == 4
    assert theorem_bound((2, 2), 5) == 3
    assert theorem_bound((3, 3), 1) == 9 - 4
    assert theorem_bound((2, 2, 2), 1) == 8 - 3


def test_tight_instance():
    I = Ideal.parse(XYZ, ["x^2", "y^2", "x*y"])
    inst = instance_from_ideal(I, last_index=2)
    rep = verify_instance(inst, with_koszul=True)
    assert (rep.e_RI, rep.bound, rep.bound_gap) == (3, 3, 0)
    assert (rep.lambda_Il, rep.lambda_fl, rep.e_Rf) == (3, 4, 4)
    assert rep.all_ok
    assert rep.hf_drop_ok and rep.core_gate_ok and rep.serre_ok
    assert (rep.chi, rep.chi1) == (3, 0)


def test_artinian_instance_on_the_bound():
    # N = n = 2: e(R/I) is the length of R/(x^2, y^3, xy) = 4 = 6 - max(1, 3 - 1)
    ctx = RingContext.of(("x", "y"))
    inst = instance_from_ideal(Ideal.parse(ctx, ["x^2", "y^3", "x*y"]), last_index=2)
    rep = verify_instance(inst)
    assert (rep.e_RI, rep.bound, rep.bound_gap) == (4, 4, 0)
    assert rep.all_ok


def test_high_degree_last_generator():
    inst = random_aci(XYZ, (2, 2), 5, seed=0)
    rep = verify_instance(inst)
    assert rep.bound == 3 and rep.e_RI <= rep.e_Rf - 1
    # f_last lies in m^3, inside (f, ell): the length inequality is not strict
    assert rep.chain_ok and not rep.chain_strict
    assert rep.hf_drop_ok is None and rep.core_gate_ok is None
    assert rep.all_ok


def test_instance_from_ideal_rejects_non_aci():
    with pytest.raises(ValueError):
        instance_from_ideal(Ideal.parse(XYZ, ["x^2"]))
    from aciverify.instances import GenerationError

    with pytest.raises((GenerationError, ValueError)):
        instance_from_ideal(Ideal.parse(XYZ, ["x^2", "y^2", "x^2*y"]), last_index=2)


def _strip(lines):
    out = []
    for line in lines:
        rec = json.loads(line)
        rec.pop("wall_time")
        out.append(json.dumps(rec, sort_keys=True))
    return out


def test_campaign_records_and_determinism(tmp_path):
    params = CampaignParams(n=3, degrees=(2, 2), d_last=2, trials=3, base_seed=7, koszul_first=1)
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    stream = io.StringIO()
    s1 = run_campaign(params, a, workers=1, stream=stream)
    s2 = run_campaign(params, b, workers=1)
    assert s1.ok and s2.ok and s1.passed == 3
    summary = json.loads(stream.getvalue())
    assert summary["passed"] == 3 and summary["min_bound_gap"] >= 0
    la, lb = a.read_text().splitlines(), b.read_text().splitlines()
    assert len(la) == 3
    assert _strip(la) == _strip(lb)
    recs = [json.loads(x) for x in la]
    assert [r["seed"] for r in recs] == [7, 8, 9]
    for rec in recs:
        assert rec["spec_version"] == SPEC_VERSION
        assert set(RECORD_FIELDS) <= set(rec)
        assert rec["bound_ok"] and rec["error"] is None
    assert recs[0]["serre_ok"] is True and recs[1]["serre_ok"] is None


def test_campaign_appends(tmp_path):
    out = tmp_path / "c.jsonl"
    params = CampaignParams(n=3, degrees=(2,), d_last=2, trials=1, base_seed=0, koszul_first=0)
    run_campaign(params, out, workers=1)
    run_campaign(params, out, workers=1)
    lines = out.read_text().splitlines()
    assert len(lines) == 2 and _strip(lines[:1]) == _strip(lines[1:])


def test_campaign_records_errors_per_trial(tmp_path):
    # n = 2 with degrees (2, 2) and d_last = 3 admits no instance at all
    params = CampaignParams(n=2, degrees=(2, 2), d_last=3, trials=2, koszul_first=0)
    summary = run_campaign(params, tmp_path / "e.jsonl", workers=1)
    assert summary.errors == 2 and not summary.ok
    rec = json.loads((tmp_path / "e.jsonl").read_text().splitlines()[0])
    assert rec["error"].startswith("GenerationError") and rec["bound_ok"] is None


def test_parallel_campaign_matches_serial(tmp_path):
    params = CampaignParams(n=3, degrees=(2,), d_last=2, trials=2, base_seed=3, koszul_first=0)
    run_campaign(params, tmp_path / "s.jsonl", workers=1)
    run_campaign(params, tmp_path / "p.jsonl", workers=2)
    assert _strip((tmp_path / "s.jsonl").read_text().splitlines()) == \
        _strip((tmp_path / "p.jsonl").read_text().splitlines())


def test_campaign_rejects_zero_trials():
    with pytest.raises(ValueError):
        run_campaign(CampaignParams(n=3, degrees=(2,), d_last=2, trials=0), None)
