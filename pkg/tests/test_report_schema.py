import json
from pathlib import Path

import pytest

from cli.main import main
from cli.schemas import ReportDocument

SCHEMA_PATH = Path(__file__).resolve().parent.parent / "schemas" / "report.schema.json"


@pytest.fixture(scope="module")
def published():
    return json.loads(SCHEMA_PATH.read_text(encoding="utf-8"))


@pytest.fixture(scope="module")
def generated():
    return ReportDocument.model_json_schema()


def test_definitions_match(published, generated):
    assert set(published["$defs"]) == set(generated["$defs"])
    for name, definition in generated["$defs"].items():
        assert set(published["$defs"][name]["properties"]) == set(definition["properties"]), name
        assert set(published["$defs"][name].get("required", [])) == set(definition.get("required", [])), name


def test_top_level_matches(published, generated):
    assert set(published["properties"]) == set(generated["properties"])
    assert set(published["required"]) == set(generated["required"])
    assert published["properties"]["results"]["discriminator"]["propertyName"] == "kind"
    assert set(published["properties"]["results"]["discriminator"]["mapping"]) == {
        "verify", "family", "search", "check-float",
    }


def test_schema_command_prints_generated_schema(capsys, generated):
    assert main(["schema"]) == 0
    assert json.loads(capsys.readouterr().out) == generated


def test_documents_carry_schema_version(capsys, published):
    main(["family", "--k-max", "2"])
    doc = json.loads(capsys.readouterr().out)
    assert set(doc) == set(published["required"])
    assert doc["results"]["kind"] == "family"
