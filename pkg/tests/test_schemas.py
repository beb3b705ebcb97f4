import pytest

from sphere.errors import ConfigParseError
from sphere.schemas import ConfigurationFile, dump_model, parse_configuration, read_configuration, write_model


def test_parse_configuration():
    config = parse_configuration('{"dots": [{"u": "0", "v": "1/2"}, {"u": "-3", "v": "0"}]}')
    assert config.n == 2
    assert str(config.planar_provenance[0].v) == "1/2"


@pytest.mark.parametrize("text", [
    '{"dots": [{"u": "2/4", "v": "0"}]}',
    '{"dots": [{"u": "1", "v": "-0"}]}',
    '{"dots": []}',
    '{"dots": [{"u": "1", "v": "0"}, {"u": "1", "v": "0"}]}',
    '{"dots": [{"u": "1"}]}',
    'not json',
])
def test_parse_configuration_rejects(text):
    with pytest.raises(ConfigParseError):
        parse_configuration(text)


def test_missing_file(tmp_path):
    with pytest.raises(ConfigParseError):
        read_configuration(str(tmp_path / "missing.json"))


def test_configuration_file_round_trip(named, tmp_path):
    config = named("six-dots")
    document = ConfigurationFile.from_config(config, name="six-dots")
    path = tmp_path / "six.json"
    write_model(document, str(path))
    text = path.read_text(encoding="utf-8")
    assert text.endswith("}\n")
    assert read_configuration(str(path)) == config
    assert dump_model(ConfigurationFile.from_config(read_configuration(str(path)), name="six-dots")) == text


def test_from_sphere_config_recovers_planar_points(named):
    from sphere.geom_core import DotConfig
    config = named("two-pairs")
    document = ConfigurationFile.from_config(DotConfig(config.dots))
    assert [(d.u, d.v) for d in document.dots][0] == ("1/2", "0")
