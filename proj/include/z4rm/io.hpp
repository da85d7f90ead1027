#pragma once

// Text formats: code files, word lists and verification reports.
//
// Code file (ASCII, LF line endings, no trailing whitespace):
//
//   Z4CODE v1 n=<n> rows=<g> label=<escaped>
//   <g rows of n digits from 0..3>
//
// The label is percent-encoded outside [A-Za-z0-9()[\];,=:._+#/-] and may
// be omitted on input. Several code files may be concatenated into a list.

#include <string>
#include <string_view>
#include <vector>

#include "z4rm/analysis.hpp"
#include "z4rm/codes.hpp"

namespace z4rm::io {

std::string escape_label(std::string_view label);
// Throws ParseError (line 0) on a malformed escape.
std::string unescape_label(std::string_view escaped);

std::string render_code(const Z4Code& code);
std::string render_code_list(const std::vector<Z4Code>& codes);

// Exactly one code. Throws ParseError with line/column diagnostics.
Z4Code parse_code(std::string_view text);
std::vector<Z4Code> parse_code_list(std::string_view text);

// True when the text starts with a code file header.
bool looks_like_code_file(std::string_view text);

// One digit string per line; empty lines are skipped.
std::vector<Z4Word> parse_z4_words(std::string_view text);
std::vector<BitWord> parse_bit_words(std::string_view text);

std::string render_binary_code(const BinaryCode& code);

// Human-readable report.
std::string render_report_text(const VerificationReport& report);
// One `claim=<name> expected=<v> got=<v> status=<pass|fail|skipped>` line per
// claim, followed by a summary record.
std::string render_report_lines(const VerificationReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace z4rm::io
