#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "uavwpt/error.hpp"
#include "uavwpt/io/csv.hpp"
#include "uavwpt/units.hpp"

// Touchstone v1 two-port (.s2p) reader and writer.

namespace uavwpt::io {

using Complex = std::complex<double>;

struct TwoPortSample {
  double frequency = 0.0;  // Hz
  Complex s11, s12, s21, s22;
  double z0 = 50.0;  // ohm
};

enum class DataFormat { RI, MA, DB };

struct TouchstoneOptions {
  double frequency_multiplier = 1e9;  // GHz is the format default
  DataFormat format = DataFormat::MA;
  double z0 = 50.0;
};

namespace detail {

inline std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

inline std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline TouchstoneOptions parse_option_line(std::string_view line, std::size_t line_no) {
  TouchstoneOptions opt;
  const auto tok = tokens(line.substr(1));
  for (std::size_t i = 0; i < tok.size(); ++i) {
    const std::string t = upper(tok[i]);
    if (t == "HZ") opt.frequency_multiplier = 1.0;
    else if (t == "KHZ") opt.frequency_multiplier = 1e3;
    else if (t == "MHZ") opt.frequency_multiplier = 1e6;
    else if (t == "GHZ") opt.frequency_multiplier = 1e9;
    else if (t == "S") continue;
    else if (t == "Y" || t == "Z" || t == "H" || t == "G") {
      throw FormatError("only S-parameter files are supported, got parameter type " + t, line_no);
    }
    else if (t == "RI") opt.format = DataFormat::RI;
    else if (t == "MA") opt.format = DataFormat::MA;
    else if (t == "DB") opt.format = DataFormat::DB;
    else if (t == "R") {
      if (i + 1 >= tok.size()) throw FormatError("option line: R without reference impedance", line_no);
      opt.z0 = parse_double(tok[++i], line_no);
      if (!(opt.z0 > 0.0)) throw FormatError("reference impedance must be positive", line_no);
    } else {
      throw FormatError("option line: unknown token '" + std::string(tok[i]) + "'", line_no);
    }
  }
  return opt;
}

inline Complex to_complex(double a, double b, DataFormat fmt) {
  switch (fmt) {
    case DataFormat::RI:
      return {a, b};
    case DataFormat::MA:
      return std::polar(a, units::deg_to_rad(b));
    case DataFormat::DB:
      return std::polar(std::pow(10.0, a / 20.0), units::deg_to_rad(b));
  }
  return {};
}

}  // namespace detail

/// Parses a Touchstone v1 two-port file. Rows are `f S11 S21 S12 S22` with
/// each parameter as a pair in the format named on the option line.
inline std::vector<TwoPortSample> parse_touchstone(std::string_view text) {
  std::vector<TwoPortSample> samples;
  bool have_options = false;
  TouchstoneOptions opt;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto bang = line.find('!'); bang != std::string_view::npos) line = line.substr(0, bang);
    const auto tok = detail::tokens(line);
    if (tok.empty()) continue;
    if (tok.front().front() == '[') {
      throw FormatError("Touchstone v2 keyword " + std::string(tok.front()) +
                            " found; only Touchstone v1 files are supported",
                        line_no);
    }
    if (tok.front().front() == '#') {
      if (have_options) throw FormatError("duplicate option line", line_no);
      opt = detail::parse_option_line(line.substr(line.find('#')), line_no);
      have_options = true;
      continue;
    }
    if (!have_options) throw FormatError("data before the '#' option line", line_no);
    if (tok.size() != 9) {
      throw FormatError("expected 9 columns (frequency + 4 complex pairs), got " + std::to_string(tok.size()),
                        line_no);
    }
    double v[9];
    for (int i = 0; i < 9; ++i) v[i] = parse_double(tok[static_cast<std::size_t>(i)], line_no);
    TwoPortSample s;
    s.frequency = v[0] * opt.frequency_multiplier;
    if (!(s.frequency > 0.0)) throw FormatError("frequency must be positive", line_no);
    if (!samples.empty() && !(s.frequency > samples.back().frequency)) {
      throw FormatError("frequencies must be strictly increasing", line_no);
    }
    s.s11 = detail::to_complex(v[1], v[2], opt.format);
    s.s21 = detail::to_complex(v[3], v[4], opt.format);
    s.s12 = detail::to_complex(v[5], v[6], opt.format);
    s.s22 = detail::to_complex(v[7], v[8], opt.format);
    s.z0 = opt.z0;
    samples.push_back(s);
  }
  if (!have_options) throw FormatError("missing '#' option line");
  return samples;
}

inline std::string to_string(DataFormat fmt) {
  switch (fmt) {
    case DataFormat::RI: return "RI";
    case DataFormat::MA: return "MA";
    case DataFormat::DB: return "DB";
  }
  return "RI";
}

/// Writes samples in Hz at full precision. With the default RI format,
/// parse(write(x)) reproduces x exactly; MA and DB go through polar conversion.
inline std::string write_touchstone(const std::vector<TwoPortSample>& samples,
                                    const std::vector<std::string>& comments = {},
                                    DataFormat fmt = DataFormat::RI) {
  const double z0 = samples.empty() ? 50.0 : samples.front().z0;
  for (const auto& s : samples) {
    if (s.z0 != z0) throw FormatError("all samples must share one reference impedance");
  }
  std::ostringstream os;
  for (const auto& c : comments) os << "! " << c << '\n';
  os << "# Hz S " << to_string(fmt) << " R " << format_double(z0) << '\n';
  for (const auto& s : samples) {
    os << format_double(s.frequency);
    for (const Complex& c : {s.s11, s.s21, s.s12, s.s22}) {
      double a = c.real(), b = c.imag();
      if (fmt != DataFormat::RI) {
        a = fmt == DataFormat::MA ? std::abs(c) : 20.0 * std::log10(std::abs(c));
        b = std::arg(c) * 180.0 / kPi;
      }
      os << ' ' << format_double(a) << ' ' << format_double(b);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace uavwpt::io
