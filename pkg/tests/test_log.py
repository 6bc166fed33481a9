#! /usr/bin/env python3
# -*- coding: utf-8 -*-
#
# dct16 - log.py tests
#
import io
import sys

import log
from Config import Config


def test_init_after_stderr_was_closed(monkeypatch):
    Config.logging_level = "ERROR"
    first = io.StringIO()
    monkeypatch.setattr(sys, "stderr", first)
    log.init()
    first.close()

    second = io.StringIO()
    monkeypatch.setattr(sys, "stderr", second)
    log.init()
    log.error("after close")
    assert "after close" in second.getvalue()


def test_init_is_idempotent(monkeypatch):
    Config.logging_level = "INFO"
    stream = io.StringIO()
    monkeypatch.setattr(sys, "stderr", stream)
    log.init()
    log.init()
    log.info("once")
    assert stream.getvalue().count("once") == 1


def test_run_twice_under_replaced_stderr(monkeypatch):
    import command
    stream = io.StringIO()
    monkeypatch.setattr(sys, "stderr", stream)
    assert command.run(command.parse_args(["verify"])) == 0
    stream.close()
    monkeypatch.setattr(sys, "stderr", io.StringIO())
    assert command.run(command.parse_args(["verify"])) == 0


# EOF
