import json
import logging

import pytest
from pydantic import ValidationError

from apps.cli.core import logging as cli_logging
from apps.cli.core.config import Settings
from apps.cli.io import dumps, parse_vector, parse_vectors, point_from_payload
from apps.cli.schemas import ConeFile, PointFile
from tests.factories import orthant


def _ours():
    return [h for h in logging.getLogger().handlers if getattr(h, "_rootmonoid", False)]


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("ROOTMONOID_SEED", "42")
    monkeypatch.setenv("CENTER_DEGREE_BOUND", "5")
    settings = Settings(_env_file=None)
    assert settings.ROOTMONOID_SEED == 42
    assert settings.CENTER_DEGREE_BOUND == 5
    assert settings.RATIONAL_BOUND == 9


def test_setup_logging_installs_one_handler():
    cli_logging.setup_logging(verbose=True)
    cli_logging.setup_logging(verbose=True)
    assert len(_ours()) == 1
    assert logging.getLogger().level == logging.DEBUG
    cli_logging.setup_logging()
    assert logging.getLogger().level == logging.WARNING


def test_json_log_format(monkeypatch, capsys):
    monkeypatch.setattr(cli_logging.settings, "LOG_FORMAT", "json")
    cli_logging.setup_logging(verbose=True)
    logging.getLogger("packages.test").warning("hello")
    record = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert (record["level"], record["name"], record["message"]) == ("WARNING", "packages.test", "hello")
    assert "service" not in record and "timestamp" not in record
    cli_logging.setup_logging()


def test_vector_parsing():
    assert parse_vector("1,0,-2") == [1, 0, -2]
    assert parse_vector("[3]") == [3]
    assert parse_vector("") == []
    assert parse_vectors("0,0;1,0") == [[0, 0], [1, 0]]


def test_cone_file_validation():
    assert ConeFile.model_validate({"rays": [["1", 0], [0, 1]]}).rays == [[1, 0], [0, 1]]
    with pytest.raises(ValidationError):
        ConeFile.model_validate({"rays": [[1, 0], [0, 1, 0]]})
    with pytest.raises(ValidationError):
        ConeFile.model_validate({"rank": 3, "rays": [[1, 0], [0, 1]]})


def test_point_file_needs_one_form():
    with pytest.raises(ValidationError):
        PointFile.model_validate({"face_rays": [], "values": [1, 1], "generator_values": [1, 1]})
    with pytest.raises(ValidationError):
        PointFile.model_validate({"values": [1, 1]})


def test_point_from_generator_values():
    cone = orthant(2)
    x = point_from_payload({"generator_values": ["3", "1/2"]}, cone)
    assert dumps(x) == dumps(point_from_payload({"face_rays": [], "basis": [[0, 1], [1, 0]], "values": ["3", "1/2"]}, cone))


def test_dumps_sorts_keys():
    assert dumps({"b": 1, "a": [1, 2]}).splitlines()[1].strip().startswith('"a"')
