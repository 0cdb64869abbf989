// Copyright 2026 The qsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsearch/circuit_io.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "qsearch/error.hpp"

namespace qsearch {

namespace {

std::string format_angle(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw Error("cannot format angle");
  return std::string(buf, end);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

unsigned parse_unsigned(std::string_view token, std::size_t line, const char* what) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(std::string("invalid ") + what + " '" + std::string(token) + "'", line);
  }
  return value;
}

double parse_angle(std::string_view token, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() ||
      !std::isfinite(value)) {
    throw ParseError("invalid angle '" + std::string(token) + "'", line);
  }
  return value;
}

GateKind parse_kind(std::string_view token, std::size_t line) {
  if (token == "X") return GateKind::x();
  if (token == "H") return GateKind::h();
  const auto open = token.find('(');
  if (open != std::string_view::npos && token.back() == ')') {
    const std::string_view name = token.substr(0, open);
    const std::string_view arg = token.substr(open + 1, token.size() - open - 2);
    if (name == "RY") return GateKind::ry(parse_angle(arg, line));
    if (name == "PHASE") return GateKind::phase(parse_angle(arg, line));
    throw ParseError("unknown gate '" + std::string(name) + "'", line);
  }
  throw ParseError("unknown gate '" + std::string(token) + "'", line);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::string export_circuit(const Circuit& circuit) {
  std::string out = "qubits: " + std::to_string(circuit.num_qubits());
  for (const GateOp& op : circuit.ops()) {
    out += '\n';
    switch (op.kind.type) {
      case GateType::X:
        out += "X";
        break;
      case GateType::H:
        out += "H";
        break;
      case GateType::Ry:
        out += "RY(" + format_angle(op.kind.angle) + ")";
        break;
      case GateType::Phase:
        out += "PHASE(" + format_angle(op.kind.angle) + ")";
        break;
    }
    out += ' ' + std::to_string(op.target) + " | controls:";
    for (const Control& c : op.controls) {
      out += c.polarity == Polarity::OnOne ? " +q" : " -q";
      out += std::to_string(c.qubit);
    }
  }
  return out;
}

Circuit parse_circuit(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    const std::string_view line = trim(raw);
    if (!line.empty()) lines.emplace_back(line_no, line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (lines.empty()) throw ParseError("empty circuit text: missing 'qubits:' header", 1);

  const auto [header_line, header] = lines.front();
  constexpr std::string_view kHeader = "qubits:";
  if (header.substr(0, kHeader.size()) != kHeader) {
    throw ParseError("expected 'qubits: <n>' header", header_line);
  }
  const unsigned n = parse_unsigned(trim(header.substr(kHeader.size())), header_line,
                                    "qubit count");
  if (n == 0 || n > kMaxQubits) {
    throw ParseError("qubit count " + std::to_string(n) + " outside [1, " +
                         std::to_string(kMaxQubits) + "]",
                     header_line);
  }

  Circuit circuit(n);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto [ln, line] = lines[k];
    const auto bar = line.find('|');
    if (bar == std::string_view::npos) throw ParseError("missing '| controls:'", ln);
    const auto head = split_ws(trim(line.substr(0, bar)));
    if (head.size() != 2) throw ParseError("expected '<GATE> <target>' before '|'", ln);
    const std::string_view tail = trim(line.substr(bar + 1));
    constexpr std::string_view kControls = "controls:";
    if (tail.substr(0, kControls.size()) != kControls) {
      throw ParseError("expected 'controls:' after '|'", ln);
    }

    GateOp op;
    op.kind = parse_kind(head[0], ln);
    op.target = parse_unsigned(head[1], ln, "target qubit");
    for (std::string_view tok : split_ws(tail.substr(kControls.size()))) {
      if (tok.size() < 3 || (tok[0] != '+' && tok[0] != '-') || tok[1] != 'q') {
        throw ParseError("invalid control '" + std::string(tok) + "'", ln);
      }
      op.controls.push_back({parse_unsigned(tok.substr(2), ln, "control qubit"),
                             tok[0] == '+' ? Polarity::OnOne : Polarity::OnZero});
    }
    try {
      circuit.add(std::move(op));
    } catch (const Error& e) {
      throw ParseError(e.what(), ln);
    }
  }
  return circuit;
}

}  // namespace qsearch
