#! /usr/bin/env python3
# -*- coding: utf-8 -*-
#
# dct16 - multiplierless 16-point DCT approximation toolkit
#
# Pgm.py
#   0.1.0   2026.10.18  Initial version.
#
#
# Binary 8-bit PGM ("P5", maxval 255) reader and writer. Other formats are
# converted externally, for example:
#
#   convert lena.tiff -colorspace Gray -depth 8 lena.pgm
#
import os
import numpy

from Transform  import Error, InvalidArgument
from Codec      import GrayImage


class Pgm:
    MAGIC   = b"P5"
    MAXVAL  = 255

    class MissingFile(Error):
        reason = "missing-file"

    class UnsupportedFormat(Error):
        reason = "unsupported-format"

    class TruncatedPayload(Error):
        reason = "truncated-payload"

    class UnsupportedMaxval(Error):
        reason = "unsupported-maxval"

    class Malformed(Error):
        reason = "parse-error"

    class Unreadable(Error):
        reason = "io-error"

    class WriteFailed(Error):
        reason = "io-error"



def _header_fields(data: bytes, path: str) -> tuple:
    """Magic, width, height and maxval tokens, plus payload offset.
    '#' comments run to end of line. A single whitespace byte ends the
    header."""
    fields = []
    pos = 0
    while len(fields) < 4:
        while pos < len(data) and data[pos:pos + 1].isspace():
            pos += 1
        if pos < len(data) and data[pos:pos + 1] == b"#":
            end = data.find(b"\n", pos)
            pos = len(data) if end < 0 else end + 1
            continue
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace() \
                and data[pos:pos + 1] != b"#":
            pos += 1
        if start == pos:
            raise Pgm.Malformed("'{}': incomplete header".format(path))
        fields.append(data[start:pos])
        if len(fields) == 1 and fields[0] != Pgm.MAGIC:
            raise Pgm.UnsupportedFormat(
                "'{}': magic {!r} is not binary PGM (P5)".format(path, fields[0])
            )
    if pos >= len(data) or not data[pos:pos + 1].isspace():
        raise Pgm.Malformed("'{}': no whitespace after maxval".format(path))
    return fields, pos + 1


def read_pgm(path: str) -> GrayImage:
    try:
        with open(path, "rb") as file:
            data = file.read()
    except FileNotFoundError:
        raise Pgm.MissingFile("'{}' does not exist".format(path)) from None
    except OSError as e:
        raise Pgm.Unreadable("'{}': {}".format(path, e.strerror)) from None

    (_, width, height, maxval), offset = _header_fields(data, path)
    try:
        width, height, maxval = int(width), int(height), int(maxval)
    except ValueError:
        raise Pgm.Malformed(
            "'{}': non-numeric header field".format(path)
        ) from None
    if width < 1 or height < 1:
        raise Pgm.Malformed(
            "'{}': invalid dimensions {}x{}".format(path, width, height)
        )
    if maxval != Pgm.MAXVAL:
        raise Pgm.UnsupportedMaxval(
            "'{}': maxval {} (only {} is supported)".format(path, maxval, Pgm.MAXVAL)
        )
    payload = data[offset:]
    if len(payload) < width * height:
        raise Pgm.TruncatedPayload(
            "'{}': {} of {} sample bytes".format(path, len(payload), width * height)
        )
    samples = numpy.frombuffer(payload, dtype=numpy.uint8, count=width * height)
    return GrayImage(
        width, height, samples,
        label = os.path.splitext(os.path.basename(path))[0]
    )


def write_pgm(image: GrayImage, path: str):
    if image.width < 1 or image.height < 1:
        raise InvalidArgument("Cannot write an empty image")
    header = "P5\n{} {}\n{}\n".format(image.width, image.height, Pgm.MAXVAL)
    try:
        with open(path, "wb") as file:
            file.write(header.encode("ascii"))
            file.write(image.pixels.tobytes())
    except OSError as e:
        raise Pgm.WriteFailed("Cannot write '{}': {}".format(path, e.strerror)) from None


# EOF
