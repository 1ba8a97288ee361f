import json

from models.scan import ScanConfig
from seeder import EXAMPLE_CONFIGS, seed_configs


def test_creates_every_example(tmp_path):
    results = seed_configs(str(tmp_path))
    assert len(results) == len(EXAMPLE_CONFIGS) == 8
    assert all(created for _, created in results)
    for path, _ in results:
        ScanConfig.model_validate(json.loads(path.read_text(encoding="utf-8")))


def test_is_idempotent(tmp_path):
    seed_configs(str(tmp_path))
    assert not any(created for _, created in seed_configs(str(tmp_path)))


def test_keeps_local_edits(tmp_path):
    edited = tmp_path / "period.json"
    edited.write_text('{"quantity": "period"}\n', encoding="utf-8")
    seed_configs(str(tmp_path))
    assert edited.read_text(encoding="utf-8") == '{"quantity": "period"}\n'
