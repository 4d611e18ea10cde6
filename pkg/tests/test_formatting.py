import io
import json
import logging

from naflab.config import OutputFormat
from naflab.logging_setup import (
    _WarningColorFormatter,
    configure_logging,
    resolve_level,
    worker_initializer,
)
from naflab.presentation.cli.formatting import render


def test_json_is_indented_and_keeps_unicode() -> None:
    text = render({"human": "1 - τ", "ok": True}, OutputFormat.JSON)

    assert text.endswith("}\n")
    assert "τ" in text
    assert json.loads(text) == {"human": "1 - τ", "ok": True}


def test_csv_table_with_fixed_columns() -> None:
    rows = [{"p": 1, "verdict": "O", "witness_n": None}, {"p": 2, "verdict": "N", "witness_n": 1}]

    text = render(rows, "csv", columns=("p", "verdict", "witness_n"))

    assert text == "p,verdict,witness_n\n1,O,\n2,N,1\n"


def test_csv_single_record_is_a_one_row_table() -> None:
    text = render({"optimal": False, "witness": {"n": 1}}, "csv")

    assert text.splitlines() == ["optimal,witness", 'false,"{""n"":1}"']


def test_plain_record_and_table() -> None:
    record = {"system": "p=3,q=3", "digits": ["0,0", "1,0"], "witness": {"n": 0}}

    assert render(record, "plain").splitlines() == [
        "system: p=3,q=3",
        "digits: 0,0 1,0",
        "witness:",
        "  n: 0",
    ]
    table = render([{"p": -1, "verdict": "O"}, {"p": 10, "verdict": "N"}], "plain")
    assert table.splitlines() == ["p   verdict", "-1  O", "10  N"]


def test_plain_list_of_records() -> None:
    record = {"expansion": [{"digit": "1", "exponent": 0}]}

    assert render(record, "plain") == "expansion:\n  - digit=1, exponent=0\n"


def test_configure_logging_replaces_root_handlers() -> None:
    root = logging.getLogger()
    saved = (root.level, list(root.handlers))
    stream = io.StringIO()
    try:
        assert configure_logging("info", stream=stream) == logging.INFO
        assert root.level == logging.INFO
        assert len(root.handlers) == 1
        logging.getLogger("naflab.optimality").info("deciding")
        assert "INFO [MainProcess naflab.optimality] deciding" in stream.getvalue()

        assert configure_logging("nonsense", stream=stream) == logging.WARNING
        assert root.level == logging.WARNING
        assert "Unknown log level 'nonsense'; using WARNING" in stream.getvalue()
    finally:
        root.setLevel(saved[0])
        root.handlers[:] = saved[1]


def test_resolve_level() -> None:
    assert resolve_level("debug") == logging.DEBUG
    assert resolve_level(" Warning ") == logging.WARNING
    assert resolve_level(logging.ERROR) == logging.ERROR
    assert resolve_level(None) == logging.WARNING
    assert resolve_level("loud") is None


def test_worker_initializer_configures_the_worker(mocker) -> None:
    configure = mocker.patch("naflab.logging_setup.configure_logging")

    worker_initializer(logging.DEBUG)

    configure.assert_called_once_with(logging.DEBUG)


def test_warning_formatter_colors_only_warnings() -> None:
    formatter = _WarningColorFormatter("%(levelname)s %(message)s", color_warnings=True)
    warning = logging.LogRecord("naflab", logging.WARNING, __file__, 1, "careful", None, None)
    info = logging.LogRecord("naflab", logging.INFO, __file__, 1, "fine", None, None)

    assert formatter.format(warning) == "\x1b[33mWARNING careful\x1b[0m"
    assert formatter.format(info) == "INFO fine"
