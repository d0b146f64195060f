import pytest

from braidforge.config import Config, apply_overrides, load_config_file
from braidforge.garside import GarsideCaps


def test_defaults():
    cfg = Config()
    assert cfg.sign_convention == "left-positive"
    assert cfg.targets == ("S3", "S4")
    assert cfg.generator_caps["S3"] == 14
    assert cfg.generator_caps["S4"] == 10
    assert cfg.generator_caps["S5"] == 8


def test_validation():
    with pytest.raises(ValueError):
        Config(sign_convention="sideways")
    with pytest.raises(ValueError):
        Config(generator_caps={"S3": 0})
    with pytest.raises(ValueError):
        Config(garside_caps=GarsideCaps(summit_set=-1))


def test_unknown_target_rejected():
    cfg = Config(targets=("S3", "NOPE"))
    with pytest.raises(ValueError):
        cfg.resolve_targets()


def test_overrides_parsing(tmp_path):
    path = tmp_path / "cfg"
    path.write_text(
        "# comment\n"
        "sign_convention=right-positive\n"
        "targets=S3,Q8\n"
        "caps.generators=S3=9, *=5\n"
        "caps.summit_set=123\n"
        "caps.cycling=77\n"
        "caps.word_search=99\n"
    )
    cfg = apply_overrides(Config(), load_config_file(str(path)))
    assert cfg.sign_convention == "right-positive"
    assert cfg.targets == ("S3", "Q8")
    assert cfg.generator_caps["S3"] == 9
    assert cfg.generator_caps["*"] == 5
    assert cfg.generator_caps["S4"] == 10  # untouched default
    assert cfg.garside_caps.summit_set == 123
    assert cfg.garside_caps.cycling == 77
    assert cfg.garside_caps.word_search == 99


def test_resolve_builtins():
    names = [t.name for t in Config(targets=("S3", "D5", "Q8")).resolve_targets()]
    assert names == ["S3", "D5", "Q8"]
