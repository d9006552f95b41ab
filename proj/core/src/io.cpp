#include "focalpair/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace focalpair {
namespace {

constexpr double kPi = 3.14159265358979323846;

double strict_double(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  return v;
}

using Formatter = std::string (*)(double);

std::string format_golden(double v) { return format_sig(v, 6); }

Formatter pick(bool golden_digits) {
  return golden_digits ? static_cast<Formatter>(&format_golden)
                       : static_cast<Formatter>(&format_shortest);
}

void write_row(std::ostream& os, const std::vector<double>& vals,
               Formatter fmt) {
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) os << ',';
    os << fmt(vals[i]);
  }
  os << '\n';
}

}  // namespace

std::string format_shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_sig(double v, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

double parse_angle(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s.push_back(static_cast<char>(
          std::tolower(static_cast<unsigned char>(c))));
    }
  }
  if (s.empty()) throw std::invalid_argument("empty angle");
  const std::size_t pos = s.find("pi");
  if (pos == std::string::npos) return strict_double(s);

  std::string pre = s.substr(0, pos);
  const std::string post = s.substr(pos + 2);
  double coef = 1.0;
  if (pre == "-") {
    coef = -1.0;
  } else if (!pre.empty() && pre != "+") {
    if (pre.back() == '*') pre.pop_back();
    coef = strict_double(pre);
  }
  double value = coef * kPi;
  if (!post.empty()) {
    if (post[0] == '/') {
      const double div = strict_double(post.substr(1));
      if (div == 0.0) throw std::invalid_argument("division by zero in angle");
      value /= div;
    } else if (post[0] == '*') {
      value *= strict_double(post.substr(1));
    } else {
      throw std::invalid_argument("malformed angle: '" + text + "'");
    }
  }
  return value;
}

void write_state_csv(std::ostream& os, const Trajectory& tr,
                     const std::vector<double>& residuals) {
  if (tr.concurrence.size() != tr.size()) {
    throw std::logic_error("trajectory has no concurrence column");
  }
  const bool with_res = !residuals.empty();
  if (with_res && residuals.size() != tr.size()) {
    throw std::logic_error("residual column length mismatch");
  }
  os << "t,rho_ee,rho_ss,rho_aa,re_rho_as,im_rho_as,rho_gg,concurrence";
  if (with_res) os << ",residual";
  os << '\n';
  for (std::size_t i = 0; i < tr.size(); ++i) {
    const XState& x = tr.states[i];
    std::vector<double> row{tr.times[i],        x.rho_ee,
                            x.rho_ss,           x.rho_aa,
                            x.rho_as.real(),    x.rho_as.imag(),
                            x.rho_gg,           tr.concurrence[i]};
    if (with_res) row.push_back(residuals[i]);
    write_row(os, row, &format_shortest);
  }
}

void write_scenario_csv(std::ostream& os, const Trajectory& tr,
                        const std::vector<Observable>& outputs,
                        bool golden_digits) {
  if (tr.concurrence.size() != tr.size()) {
    throw std::logic_error("trajectory has no concurrence column");
  }
  const Formatter fmt = pick(golden_digits);
  os << 't';
  for (Observable o : outputs) {
    switch (o) {
      case Observable::concurrence: os << ",concurrence"; break;
      case Observable::rho_ee: os << ",rho_ee"; break;
      case Observable::rho_ss: os << ",rho_ss"; break;
      case Observable::rho_aa: os << ",rho_aa"; break;
      case Observable::rho_as: os << ",re_rho_as,im_rho_as"; break;
    }
  }
  os << '\n';
  for (std::size_t i = 0; i < tr.size(); ++i) {
    std::vector<double> row{tr.times[i]};
    for (Observable o : outputs) {
      switch (o) {
        case Observable::concurrence: row.push_back(tr.concurrence[i]); break;
        case Observable::rho_ee: row.push_back(tr.states[i].rho_ee); break;
        case Observable::rho_ss: row.push_back(tr.states[i].rho_ss); break;
        case Observable::rho_aa: row.push_back(tr.states[i].rho_aa); break;
        case Observable::rho_as:
          row.push_back(tr.states[i].rho_as.real());
          row.push_back(tr.states[i].rho_as.imag());
          break;
      }
    }
    write_row(os, row, fmt);
  }
}

void write_sweep_csv(std::ostream& os, const SweepTable& table,
                     bool golden_digits) {
  const Formatter fmt = pick(golden_digits);
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) os << ',';
    os << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) write_row(os, row, fmt);
}

}  // namespace focalpair
