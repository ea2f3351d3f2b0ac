import csv
import io
import json

import mpmath as mp

from besselmoments.certificates import (
    Certificate,
    emit,
    make_certificate,
    make_exact_certificate,
    render,
)


def sample_certs():
    return [
        make_certificate(
            "b-two", mp.mpf(2), mp.mpf(2) + mp.mpf(10) ** -30,
            tolerance="1e-25", precision_bits=128,
        ),
        make_exact_certificate("a-one", True, "lhs", "rhs"),
        make_certificate(
            "c-three", mp.mpf(1), mp.mpf(2), tolerance="1e-10", precision_bits=64,
        ),
    ]


def test_pass_fail_logic():
    good, exact, bad = sample_certs()
    assert good.passed and exact.passed and not bad.passed


def test_relative_vs_absolute():
    c = make_certificate("x", 1000, 1000.001, tolerance="1e-5", relative=True,
                         precision_bits=64)
    assert c.passed
    c = make_certificate("x", 1000, 1000.001, tolerance="1e-5", relative=False,
                         precision_bits=64)
    assert not c.passed


def test_json_roundtrip_and_order(tmp_path):
    path = tmp_path / "certs.json"
    emit(sample_certs(), "json", str(path))
    data = json.loads(path.read_text())
    assert [d["identity_id"] for d in data] == ["a-one", "b-two", "c-three"]
    assert set(data[0]) >= {
        "identity_id", "lhs", "rhs", "residual", "relative", "tolerance",
        "precision_bits", "trunc_order", "wall_ms", "status", "provenance",
    }


def test_csv_columns():
    text = render(sample_certs(), "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows[0]["identity_id"] == "a-one"
    assert rows[1]["status"] == "pass"
    assert rows[2]["status"] == "fail"


def test_markdown_table():
    text = render(sample_certs(), "markdown")
    lines = text.splitlines()
    assert lines[0].startswith("| identity_id |")
    assert any("c-three" in l and "fail" in l for l in lines)


def test_byte_stability_modulo_wall_ms():
    a = render(sample_certs(), "json")
    b = render(sample_certs(), "json")

    def strip(s):
        return "\n".join(l for l in s.splitlines() if '"wall_ms"' not in l)

    assert strip(a) == strip(b)


def test_unknown_format():
    import pytest

    with pytest.raises(ValueError):
        render([], "yaml")
