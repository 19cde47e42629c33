"""Golden fixtures: the five well-formed / not-well-formed example pairs.

Each not-well-formed expectation lists (code identifier, line, column) for
every diagnostic the checker must produce, in report order. Positions are
re-derived in the tests with the independent counting oracle in docgen.
"""

FIG1_WELL_FORMED = (
    '<?xml version="1.0"?>\n'
    "<videocollection>\n"
    "<title>Tootsie</title>\n"
    "<title>Jurassic Park</title>\n"
    "<title>Mission Impossible</title>\n"
    "</videocollection>"
)

FIG1_NOT_WELL_FORMED = (
    "<title>Tootsie</title>\n"
    "<title>Jurassic Park</title>\n"
    "<title>Mission Impossible</title>\n"
    "</videocollection>>"
)

FIG1_NOT_WELL_FORMED_EXPECTED = [
    ("MULTIPLE_ROOT_ELEMENTS", 2, 1),
    ("MULTIPLE_ROOT_ELEMENTS", 3, 1),
    ("STRAY_END_TAG", 4, 1),
    ("CONTENT_OUTSIDE_ROOT", 4, 19),
]

FIG2_WELL_FORMED = (
    "<videocollection>\n"
    "<title>Tootsie</title>\n"
    "<title>Jurassic Park</title>\n"
    "<title>Mission Impossible</title>\n"
    "</videocollection>"
)

# Overlapping tags: the end tag closes an ancestor while 'title' is open.
FIG2_NOT_WELL_FORMED = "<videocollection><title>Tootsie</videocollection></title>"

FIG2_NOT_WELL_FORMED_EXPECTED = [
    ("MISMATCHED_END_TAG", 1, 32),
    ("STRAY_END_TAG", 1, 50),
]

# The paper's broken fragment: the end tag has no closing angle bracket.
FIG2_UNCLOSED_FRAGMENT = "<title>Tootsie</title"

FIG2_UNCLOSED_FRAGMENT_EXPECTED = [
    ("UNEXPECTED_EOF", 1, 15),
    ("UNCLOSED_ELEMENT", 1, 22),
]

FIG3_WELL_FORMED = "<crew>Sydney Pollak</crew>"

FIG3_NOT_WELL_FORMED = "<CREW>Sydney Pollak</crew>"

FIG3_NOT_WELL_FORMED_EXPECTED = [
    ("MISMATCHED_END_TAG", 1, 20),
    ("UNCLOSED_ELEMENT", 1, 27),
]

FIG4_WELL_FORMED = '<title id="1">Tootsie</title>'

FIG4_NOT_WELL_FORMED = "<title id=1>Tootsie</title>"

FIG4_NOT_WELL_FORMED_EXPECTED = [
    ("UNQUOTED_ATTRIBUTE_VALUE", 1, 11),
]

FIG5_WELL_FORMED = '<?xml version="1.0"?>\n<title>tootsize</title>'

FIG5_NOT_WELL_FORMED = "<title>tootsize</title>"

FIG5_NOT_WELL_FORMED_EXPECTED = [
    ("MISSING_DECLARATION", 1, 1),
]

EMPTY_DOCUMENT = ""

EMPTY_DOCUMENT_EXPECTED = [
    ("NO_ROOT_ELEMENT", 1, 1),
]

# (source, requires declaration option, expected diagnostics) triples for the
# whole golden suite; None for expectations means "must be clean".
GOLDEN_CASES = [
    ("fig1_well_formed", FIG1_WELL_FORMED, True, None),
    ("fig1_not_well_formed", FIG1_NOT_WELL_FORMED, False, FIG1_NOT_WELL_FORMED_EXPECTED),
    ("fig2_well_formed", FIG2_WELL_FORMED, False, None),
    ("fig2_not_well_formed", FIG2_NOT_WELL_FORMED, False, FIG2_NOT_WELL_FORMED_EXPECTED),
    ("fig2_unclosed_fragment", FIG2_UNCLOSED_FRAGMENT, False, FIG2_UNCLOSED_FRAGMENT_EXPECTED),
    ("fig3_well_formed", FIG3_WELL_FORMED, False, None),
    ("fig3_not_well_formed", FIG3_NOT_WELL_FORMED, False, FIG3_NOT_WELL_FORMED_EXPECTED),
    ("fig4_well_formed", FIG4_WELL_FORMED, False, None),
    ("fig4_not_well_formed", FIG4_NOT_WELL_FORMED, False, FIG4_NOT_WELL_FORMED_EXPECTED),
    ("fig5_well_formed", FIG5_WELL_FORMED, True, None),
    ("fig5_not_well_formed", FIG5_NOT_WELL_FORMED, True, FIG5_NOT_WELL_FORMED_EXPECTED),
    ("empty_document", EMPTY_DOCUMENT, False, EMPTY_DOCUMENT_EXPECTED),
]

# The five figure pairs used for CLI/service parity checks.
FIGURE_SOURCES = {
    "fig1_wf": FIG1_WELL_FORMED,
    "fig1_nwf": FIG1_NOT_WELL_FORMED,
    "fig2_nwf": FIG2_NOT_WELL_FORMED,
    "fig3_nwf": FIG3_NOT_WELL_FORMED,
    "fig4_nwf": FIG4_NOT_WELL_FORMED,
    "fig5_nwf": FIG5_NOT_WELL_FORMED,
}
