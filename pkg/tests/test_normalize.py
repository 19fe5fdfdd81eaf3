"""Normalization unit tests."""

import pytest

from apidialog.ingest.normalize import normalize_description


def test_verb_initial_sentence_gets_subject_prefix():
    raw = "Returns a Path object representing the absolute path of this path."
    out = normalize_description(raw)
    assert out == (
        "This method returns a Path object representing the absolute path"
        " of this path."
    )


def test_type_sentence_keeps_only_first_sentence():
    raw = (
        "Returns the value of the specified number as a double."
        " This may involve rounding."
    )
    out = normalize_description(raw)
    assert out == "This method returns the value of the specified number as a double."


def test_empty_input_round_trips():
    assert normalize_description("") == ""


def test_parenthesized_asides_are_dropped():
    raw = "Closes this stream (and releases any system resources)."
    assert normalize_description(raw) == "This method closes this stream."


def test_nested_parentheses_are_dropped_entirely():
    raw = "Reads bytes (up to (at most) the limit) from the stream."
    assert normalize_description(raw) == "This method reads bytes from the stream."


def test_whitespace_collapses_and_punctuation_tightens():
    raw = "Writes   the value ,  then flushes ."
    assert normalize_description(raw) == "This method writes the value, then flushes."


def test_adverb_led_verb_still_prefixed():
    raw = "Fully reads the buffer."
    assert normalize_description(raw) == "This method fully reads the buffer."


def test_sentence_already_having_subject_is_untouched():
    raw = "This method returns the canonical form."
    assert normalize_description(raw) == "This method returns the canonical form."


def test_non_verb_initial_sentence_is_untouched():
    # no verb to hang a subject on, so the text passes through as-is
    raw = "Thread-safe."
    assert normalize_description(raw) == "Thread-safe."


@pytest.mark.parametrize("raw", ["   ", "()", "( nested ( deep ) )"])
def test_degenerate_inputs_come_back_empty(raw):
    assert normalize_description(raw) == ""
