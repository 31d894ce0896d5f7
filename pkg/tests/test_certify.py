import json

import pytest

from kisslat.certify import (
    Certificate,
    CertifyError,
    bounds_snapshot,
    certify_code,
    certify_file,
    emit,
    parse_certificate,
)


@pytest.fixture(scope="module")
def rep_cert(rep21):
    return certify_code(rep21)


@pytest.fixture(scope="module")
def e8_cert(e8):
    return certify_code(e8)


class TestPipeline:
    def test_rep21_values(self, rep_cert):
        c = rep_cert
        assert c.code == {
            "n": 2,
            "k": 1,
            "d": 2,
            "A_d": 1,
            "self_orthogonal": True,
            "weights": {"0": 1, "2": 1},
        }
        assert c.lattice["min_norm"] == 2
        assert c.lattice["kissing"] == 2
        assert c.lattice["determinant"] == 4
        assert c.checks["set_closed_sampled"] is True
        assert c.checks["closure_failures"] == 0
        assert c.checks["closure_trials"] == 1000
        assert c.checks["norm_equals_d"] is True
        assert c.checks["kissing_ge_Ad"] is True
        assert c.checks["span_contains_set_sampled"] is True

    def test_e8_values(self, e8_cert):
        c = e8_cert
        assert c.code["d"] == 4 and c.code["A_d"] == 14
        assert c.lattice["min_norm"] == 4
        assert c.lattice["kissing"] == 112
        assert c.checks["set_closed_sampled"] is False
        assert len(c.checks["closure_counterexamples"]) > 0

    def test_kissing_check_consistency(self, rep_cert, e8_cert):
        for c in (rep_cert, e8_cert):
            if c.lattice["min_norm"] == c.code["d"]:
                assert c.checks["kissing_ge_Ad"] == (
                    c.lattice["kissing"] >= c.code["A_d"]
                )

    def test_non_self_orthogonal_warns_not_aborts(self, tmp_path):
        p = tmp_path / "odd.code"
        p.write_text("binary-code n=3 k=1\n111\n")
        cert = certify_file(str(p))
        assert cert.code["self_orthogonal"] is False
        assert any("not self-orthogonal" in w for w in cert.meta["warnings"])
        assert cert.lattice["min_norm"] is not None

    def test_zero_code_certifies(self, tmp_path):
        p = tmp_path / "zero.code"
        p.write_text("binary-code n=2 k=0\n")
        cert = certify_file(str(p), cap=16)
        assert cert.code["d"] is None
        assert cert.checks["norm_equals_d"] is None
        assert cert.lattice["min_norm"] == 16

    def test_empty_file_stage_error(self, tmp_path):
        p = tmp_path / "empty.code"
        p.write_text("")
        with pytest.raises(CertifyError) as exc:
            certify_file(str(p))
        assert exc.value.stage == "parse_code"

    def test_missing_file_stage_error(self):
        with pytest.raises(CertifyError) as exc:
            certify_file("/nonexistent/nothing.code")
        assert exc.value.stage == "parse_code"

    def test_stage_isolation_on_enumeration_failure(self, rep21):
        # cap beyond the guard: enumeration fails, earlier stages survive
        with pytest.raises(CertifyError) as exc:
            certify_code(rep21, cap=64)
        assert exc.value.stage == "enumeration"
        partial = exc.value.partial
        assert partial["self_orthogonality"] is True
        assert partial["weights"].d == 2
        assert partial["lattice"].rows == ((1, 1), (0, 4))


class TestEmit:
    def test_json_contains_kissing(self, rep_cert):
        assert '"kissing": 2' in emit(rep_cert, "json")

    def test_deterministic_bytes(self, rep21):
        a = emit(certify_code(rep21, seed=3), "json")
        b = emit(certify_code(rep21, seed=3), "json")
        assert a == b

    def test_seed_changes_are_content_only(self, rep21):
        # different seed: still valid, canonical, and parseable
        a = parse_certificate(emit(certify_code(rep21, seed=1), "json"))
        assert a.meta["seed"] == 1

    def test_roundtrip(self, e8_cert):
        parsed = parse_certificate(emit(e8_cert, "json"))
        assert parsed.to_dict() == e8_cert.to_dict()

    def test_csv_summary(self, rep_cert):
        text = emit(rep_cert, "csv-summary")
        head, row = text.strip().split("\n")
        assert head == "n,k,d,A_d,min_norm,kissing,verdicts"
        assert row.startswith("2,1,2,1,2,2,")
        assert "set_closed_sampled=True" in row

    def test_unknown_format(self, rep_cert):
        with pytest.raises(ValueError, match="format"):
            emit(rep_cert, "xml")

    def test_sorted_keys_and_float_formatting(self, rep_cert):
        d = json.loads(emit(rep_cert, "json"))
        keys = list(d)
        assert keys == sorted(keys)
        for v in d["bounds_snapshot"].values():
            if isinstance(v, float):
                assert float(f"{v:.12g}") == v

    def test_timings_kept_out_of_canonical_form(self, rep_cert):
        assert "timings" not in json.loads(emit(rep_cert, "json"))
        assert "timings" in json.loads(emit(rep_cert, "json", include_timings=True))


class TestBoundsSnapshot:
    def test_all_constants_present(self):
        snap = bounds_snapshot()
        assert abs(snap["light_vector_exponent_s3_half"] - 0.120137) < 1e-5
        assert abs(snap["kissing_exponent_constant"] - 0.0018771) < 1e-6
        assert abs(snap["kissing_exponent_constant_tight"] - 0.0018771) < 1e-6
        assert abs(snap["rate_threshold_q64"] - 0.35708) < 1e-5
        assert abs(snap["target_distance_offset"] - 5.78e-5) < 1e-7
        assert snap["target_distance_offset_sign"] == 1
        assert snap["exponent_drop_at_target_s3"] <= 1e-6
