import json
import math
from datetime import datetime, timezone
from pathlib import Path

import pytest

from src.core.models.scan_record import SCAN_COLUMNS, ScanRecord
from src.core.models.schatten_report import Verdict
from src.storage.artifacts.artifact_store import ArtifactStore, new_run_id

UTC = timezone.utc

pytestmark = pytest.mark.unit


def test_run_id_carries_command_and_timestamp() -> None:
    run_id = new_run_id("scan", datetime(2026, 3, 1, 12, 30, 5, 123456, tzinfo=UTC))

    assert run_id == "scan_20260301T123005123456"


def test_run_directory_layout(tmp_path: Path) -> None:
    store = ArtifactStore(tmp_path)

    path = store.save_json("audit_1", "summary.json", {"ok": True})

    assert path == tmp_path / "run_audit_1" / "summary.json"
    assert store.run_dir("audit_1").is_dir()


@pytest.mark.parametrize("run_id", ["../escape", "a/b", ""])
def test_run_ids_must_be_plain_names(tmp_path: Path, run_id: str) -> None:
    with pytest.raises(ValueError):
        ArtifactStore(tmp_path).run_dir(run_id)


def test_models_are_saved_in_json_mode(tmp_path: Path) -> None:
    store = ArtifactStore(tmp_path)
    records = [ScanRecord(family="counterexample", N=2, p=math.inf, measured=1.5, verdict=Verdict.PASS)]

    path = store.save_json("scan_1", "records.json", {"records": records})

    saved = json.loads(path.read_text(encoding="utf-8"))
    assert saved["records"][0]["p"] == "inf"
    assert saved["records"][0]["verdict"] == "pass"


def test_csv_keeps_full_precision_and_blank_missing_values(tmp_path: Path) -> None:
    store = ArtifactStore(tmp_path)
    record = ScanRecord(family="random-trigpoly", N=3, p=2.0, measured=1.0 / 3.0)

    path = store.save_csv("scan_2", "scan.csv", [record.to_row()], SCAN_COLUMNS)

    header, row = path.read_text(encoding="utf-8").splitlines()
    assert header == ",".join(SCAN_COLUMNS)
    fields = row.split(",")
    assert float(fields[4]) == 1.0 / 3.0
    assert fields[3] == ""
    assert fields[6] == ""
    assert fields[7] == "n/a"


def test_csv_with_no_rows_has_a_header(tmp_path: Path) -> None:
    path = ArtifactStore(tmp_path).save_csv("scan_3", "empty.csv", [], ("a", "b"))

    assert path.read_text(encoding="utf-8") == "a,b\n"
