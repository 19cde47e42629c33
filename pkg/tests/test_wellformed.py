"""Structural rules, diagnostic catalog, recovery, and report invariants."""

import pytest

from xmlcheck import (
    Diagnostic,
    DiagnosticCode,
    ParserOptions,
    Severity,
    SourcePosition,
    SourceSpan,
    check_document,
    diagnostic_catalog,
)

from docgen import position_of
from fixtures import GOLDEN_CASES

NO_DECL = ParserOptions(require_declaration=False)


def codes_at(report):
    return [
        (d.code.value, d.span.start.line, d.span.start.column)
        for d in report.diagnostics
    ]


@pytest.mark.parametrize(
    "name,source,requires_declaration,expected",
    GOLDEN_CASES,
    ids=[case[0] for case in GOLDEN_CASES],
)
def test_golden_cases(name, source, requires_declaration, expected):
    options = ParserOptions() if requires_declaration else NO_DECL
    report = check_document(source, options=options)
    if expected is None:
        assert report.well_formed, codes_at(report)
        assert report.diagnostics == ()
    else:
        assert not report.well_formed
        assert codes_at(report) == expected


def test_fig3_mentions_both_names_and_related_span():
    report = check_document("<CREW>Sydney Pollak</crew>", options=NO_DECL)
    mismatch = report.diagnostics[0]
    assert mismatch.code is DiagnosticCode.MISMATCHED_END_TAG
    assert "CREW" in mismatch.message and "crew" in mismatch.message
    assert mismatch.related_span is not None
    assert mismatch.related_span.start == SourcePosition(1, 1)
    unclosed = report.diagnostics[1]
    assert "CREW" in unclosed.message
    assert unclosed.related_span.start == SourcePosition(1, 1)


def test_fig1_positions_match_independent_count():
    source = (
        "<title>Tootsie</title>\n<title>Jurassic Park</title>\n"
        "<title>Mission Impossible</title>\n</videocollection>>"
    )
    report = check_document(source, options=NO_DECL)
    expected_positions = [
        position_of(source, "<title>Jurassic"),
        position_of(source, "<title>Mission"),
        position_of(source, "</videocollection>"),
        position_of(source, ">", source.count(">") - 1),
    ]
    actual = [(d.span.start.line, d.span.start.column) for d in report.diagnostics]
    assert actual == expected_positions


# --- R1: exactly one root ----------------------------------------------------


def test_second_root_flagged_even_when_empty_element():
    report = check_document("<a/><b/>", options=NO_DECL)
    assert codes_at(report) == [("MULTIPLE_ROOT_ELEMENTS", 1, 5)]
    assert "b" in report.diagnostics[0].message


def test_whitespace_comments_and_pis_allowed_outside_root():
    report = check_document(" \t\n<!--c-->\n<?pi?>\n<a/>\n<!--d-->\n", options=NO_DECL)
    assert report.well_formed


def test_text_outside_root_after_root():
    report = check_document("<a/>junk", options=NO_DECL)
    assert codes_at(report) == [("CONTENT_OUTSIDE_ROOT", 1, 5)]


def test_text_before_root():
    report = check_document("  boo  <a/>", options=NO_DECL)
    assert codes_at(report) == [("CONTENT_OUTSIDE_ROOT", 1, 3)]


def test_cdata_outside_root():
    report = check_document("<a/><![CDATA[x]]>", options=NO_DECL)
    assert codes_at(report) == [("CONTENT_OUTSIDE_ROOT", 1, 5)]


def test_no_root_in_whitespace_only_document():
    report = check_document("  \n \t ", options=NO_DECL)
    assert codes_at(report) == [("NO_ROOT_ELEMENT", 2, 4)]


# --- R2/R3: nesting and exact (case-sensitive) matching -----------------------


def test_interleaved_overlap_recovers_via_ancestor():
    report = check_document("<a><b><c></a>", options=NO_DECL)
    codes = [d.code for d in report.diagnostics]
    assert codes == [
        DiagnosticCode.MISMATCHED_END_TAG,
        DiagnosticCode.UNCLOSED_ELEMENT,
    ]
    assert "b" in report.diagnostics[1].message


def test_stray_end_tag_leaves_stack_alone():
    report = check_document("<a><b></wrong></b></a>", options=NO_DECL)
    assert [d.code for d in report.diagnostics] == [DiagnosticCode.MISMATCHED_END_TAG]


def test_unclosed_elements_swept_at_end_of_input():
    source = "<a><b><c>"
    report = check_document(source, options=NO_DECL)
    assert [d.code for d in report.diagnostics] == [
        DiagnosticCode.UNCLOSED_ELEMENT,
        DiagnosticCode.UNCLOSED_ELEMENT,
        DiagnosticCode.UNCLOSED_ELEMENT,
    ]
    assert {d.message.split("'")[1] for d in report.diagnostics} == {"a", "b", "c"}
    end = position_of(source, "<c>")  # EOF column: start of '<c>' plus 3
    assert report.diagnostics[0].span.start == SourcePosition(end[0], end[1] + 3)


def test_case_variants_are_distinct_elements():
    for end in ("</Crew>", "</CREW>", "</cREW>"):
        report = check_document(f"<crew>x{end}", options=NO_DECL)
        assert report.diagnostics[0].code is DiagnosticCode.MISMATCHED_END_TAG


# --- R4: attribute rules -------------------------------------------------------


def test_duplicate_attribute_related_to_first_occurrence():
    source = '<a one="1" two="2" one="3"/>'
    report = check_document(source, options=NO_DECL)
    (dup,) = report.diagnostics
    assert dup.code is DiagnosticCode.DUPLICATE_ATTRIBUTE
    assert "one" in dup.message
    assert (dup.span.start.line, dup.span.start.column) == position_of(source, 'one="3"')
    assert dup.related_span.start == SourcePosition(*position_of(source, 'one="1"'))


def test_duplicate_attribute_in_declaration_is_bad_declaration():
    report = check_document('<?xml version="1.0" version="1.0"?><a/>')
    assert report.diagnostics[0].code is DiagnosticCode.BAD_DECLARATION


# --- R5: declaration -----------------------------------------------------------


def test_missing_declaration_severity_configurable():
    options = ParserOptions(treat_missing_declaration_as=Severity.WARNING)
    report = check_document("<a/>", options=options)
    assert report.well_formed  # warnings do not make a document not-well-formed
    assert report.warning_count == 1
    assert report.diagnostics[0].code is DiagnosticCode.MISSING_DECLARATION


def test_declaration_not_first_is_bad():
    report = check_document('<a/><?xml version="1.0"?>', options=NO_DECL)
    assert [d.code for d in report.diagnostics] == [DiagnosticCode.BAD_DECLARATION]


@pytest.mark.parametrize(
    "declaration",
    [
        "<?xml?>",
        "<?xml encoding=\"UTF-8\"?>",
        "<?xml version=\"2.0\"?>",
        "<?xml version=\"1.0\" standalone=\"maybe\"?>",
        "<?xml version=\"1.0\" standalone=\"yes\" encoding=\"UTF-8\"?>",
        "<?xml version=\"1.0\" mood=\"fine\"?>",
        "<?xml version=\"1.0\" encoding=\"not a name\"?>",
        "<?XML version=\"1.0\"?>",
        "<?XMLversion=\"1.0\"?>",
    ],
)
def test_bad_declarations(declaration):
    report = check_document(declaration + "<a/>")
    assert not report.well_formed
    assert any(d.code is DiagnosticCode.BAD_DECLARATION for d in report.diagnostics)
    # the broken attempt must not also count as "missing"
    assert not any(
        d.code is DiagnosticCode.MISSING_DECLARATION for d in report.diagnostics
    )


@pytest.mark.parametrize(
    "declaration",
    [
        '<?xml version="1.0"?>',
        "<?xml version='1.0'?>",
        '<?xml version="1.1"?>',
        '<?xml version = "1.0" ?>',
        '<?xml version="1.0" encoding="ISO-8859-1"?>',
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
    ],
)
def test_good_declarations(declaration):
    report = check_document(declaration + "<a/>")
    assert report.well_formed, codes_at(report)


# --- report invariants ----------------------------------------------------------


def test_report_is_sorted_and_counts_are_consistent():
    source = "<CREW>bad &zz; </crew><x>"
    report = check_document(source, options=NO_DECL)
    keys = [d.sort_key() for d in report.diagnostics]
    assert keys == sorted(keys)
    assert report.error_count + report.warning_count == len(report.diagnostics)
    assert report.error_count == sum(
        1 for d in report.diagnostics if d.severity is Severity.ERROR
    )
    assert report.well_formed == (report.error_count == 0)


def test_max_errors_caps_report_and_notes_truncation():
    source = "<r>" + "<x>&bad; </wrong>" * 30 + "</r>"
    options = ParserOptions(require_declaration=False, max_errors=10)
    report = check_document(source, options=options)
    assert len(report.diagnostics) == 10
    assert "suppressed" in report.diagnostics[-1].message
    assert not report.well_formed
    # parsing still continued: the overall report is capped, not truncated parsing
    full = check_document(source, options=NO_DECL)
    assert len(full.diagnostics) > 10


def test_truncation_never_hides_that_document_is_broken():
    source = "<r>" + "&bad; " * 5 + "</r>"
    options = ParserOptions(require_declaration=False, max_errors=1)
    report = check_document(source, options=options)
    assert len(report.diagnostics) == 1
    assert not report.well_formed


def test_unclosed_sweep_stays_accurate_beyond_the_cap():
    source = "<a>" + "&bad; " * 20 + "<b><c>"
    options = ParserOptions(require_declaration=False, max_errors=5)
    report = check_document(source, options=options)
    assert len(report.diagnostics) == 5
    full = check_document(source, options=NO_DECL)
    unclosed = [d for d in full.diagnostics if d.code is DiagnosticCode.UNCLOSED_ELEMENT]
    assert len(unclosed) == 3


def test_determinism():
    source = "<CREW>Sydney &x; Pollak</crew><oops id=1>"
    first = check_document(source, options=NO_DECL)
    second = check_document(source, options=NO_DECL)
    assert first == second


def test_extra_diagnostics_merge_into_report():
    extra = Diagnostic(
        DiagnosticCode.INVALID_ENCODING,
        Severity.ERROR,
        "bad byte",
        SourceSpan(SourcePosition(1, 1)),
    )
    report = check_document("<a/>", options=NO_DECL, extra_diagnostics=[extra])
    assert report.diagnostics[0].code is DiagnosticCode.INVALID_ENCODING
    assert not report.well_formed


# --- diagnostic catalog -----------------------------------------------------------


def test_catalog_has_exactly_21_entries():
    assert len(diagnostic_catalog()) == 21


def test_catalog_identifiers_unique_and_stable():
    entries = diagnostic_catalog()
    identifiers = [entry.identifier for entry in entries]
    assert len(set(identifiers)) == len(identifiers)
    assert all(i == i.upper() and " " not in i for i in identifiers)
    assert ("MISSING_DECLARATION", Severity.ERROR) in [
        (entry.identifier, entry.default_severity) for entry in entries
    ]


def test_catalog_descriptions_nonempty():
    assert all(entry.description for entry in diagnostic_catalog())


# --- recovery usefulness ------------------------------------------------------------


def test_multi_error_reporting_not_fail_fast():
    source = (
        "<title>Tootsie</title>\n<title>Jurassic Park</title>\n"
        "<title>Mission Impossible</title>\n</videocollection>>"
    )
    report = check_document(source, options=NO_DECL)
    assert len(report.diagnostics) >= 3


def test_mutation_sensitivity_on_figure_one():
    base = (
        '<?xml version="1.0"?>\n<videocollection>\n<title id="1">Tootsie</title>\n'
        "</videocollection>"
    )
    assert check_document(base).well_formed
    mutants = [
        base.replace("<title id=\"1\">", "<title id=\"1\"", 1),  # drop a '>'
        base.replace("</title>", "</Title>", 1),  # case swap
        base.replace('id="1"', "id=1", 1),  # strip quotes
        base + "\n<videocollection></videocollection>",  # second root
    ]
    for mutant in mutants:
        assert not check_document(mutant).well_formed, mutant
