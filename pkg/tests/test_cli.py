import json

import pytest

from localh.cli import main
from localh.corpus import builtin_corpus


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_validate_builtin(capsys):
    code, out = run(capsys, "validate", "builtin:triforce")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] and payload["quasi_geometric"]


def test_validate_failure_exit_code(capsys, tmp_path):
    data = builtin_corpus("triforce")
    data["facets"] = [f for f in data["facets"] if set(f) != {"a", "b", "c"}]
    data.pop("metadata", None)
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(data))
    code, out = run(capsys, "validate", str(path))
    assert code == 2
    assert not json.loads(out)["ok"]


def test_schema_error_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"name": "x"}')
    code, _ = run(capsys, "validate", str(path))
    assert code == 1
    code, _ = run(capsys, "validate", "builtin:no-such-thing")
    assert code == 1


def test_local_h_both_methods(capsys):
    code, out = run(capsys, "local-h", "builtin:triforce", "--face", "")
    assert code == 0
    payload = json.loads(out)
    assert payload["ell"] == [0, 0, 0, 0]
    assert payload["agreement"] is True
    code, out = run(capsys, "local-h", "builtin:triforce", "--face", "c")
    assert json.loads(out)["ell"] == [0, 1, 0]


def test_resolution_command(capsys):
    code, out = run(capsys, "resolution", "builtin:triforce", "--face", "c")
    assert code == 0
    payload = json.loads(out)
    assert payload["exactness"]["ok"] is True
    assert payload["summand_counts"] == [1, 2, 1]


def test_map_command(capsys):
    code, out = run(capsys, "map", "builtin:triforce", "--face", "a",
                    "--face-prime", "a,w", "--check-surjective")
    assert code == 0
    payload = json.loads(out)
    assert payload["monotonicity"] == "verified"
    code, out = run(capsys, "map", "builtin:triforce", "--face", "",
                    "--face-prime", "c", "--check-surjective")
    assert json.loads(out)["monotonicity"] == "precondition-rejected"


def test_map_compose(capsys):
    code, out = run(capsys, "map", "builtin:triforce", "--face", "",
                    "--face-prime", "c", "--check-compose", "a,c")
    assert code == 0
    assert json.loads(out)["composition"] is True


def test_audit_command(capsys):
    code, out = run(capsys, "audit", "builtin:triforce", "--face", "c")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "nonvanishing"


def test_restrict_standalone(capsys):
    code, out = run(capsys, "restrict", "builtin-face:hexface-vanishing")
    assert code == 0
    assert all(v == 0 for v in json.loads(out)["dims"])
    code, out = run(capsys, "restrict", "builtin-face:hexface-degree3")
    assert json.loads(out)["dims"][3] >= 1


def test_restrict_full_link_matches_local_h(capsys):
    _, out1 = run(capsys, "restrict", "builtin:triforce", "--face", "c")
    _, out2 = run(capsys, "local-h", "builtin:triforce", "--face", "c")
    dims = json.loads(out1)["dims"]
    ell = json.loads(out2)["ell"]
    assert dims[: len(ell)] == ell


def test_determinism_byte_identical(capsys):
    outs = set()
    for _ in range(2):
        _, out = run(capsys, "audit", "builtin:triforce", "--face", "c",
                     "--seed", "9")
        outs.add(out)
    assert len(outs) == 1
    for _ in range(2):
        _, out = run(capsys, "local-h", "builtin:stellar-interior-2simplex",
                     "--face", "", "--seed", "3")
        outs.add(out)
    assert len(outs) == 2


def test_text_format(capsys):
    code, out = run(capsys, "local-h", "builtin:triforce", "--face", "c",
                    "--format", "text")
    assert code == 0
    assert "ell" in out and "{" not in out


def test_prime_field_flag(capsys):
    code, out = run(capsys, "local-h", "builtin:triforce", "--face", "c",
                    "--field", "fp:10007")
    assert code == 0
    assert json.loads(out)["ell"] == [0, 1, 0]
