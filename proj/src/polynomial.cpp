#include "confpoly/polynomial.hpp"

#include <algorithm>

namespace confpoly {

Monomial Monomial::variable(int v, int exp) {
  return from_entries({{v, exp}});
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  Monomial m;
  for (const auto& [v, e] : entries) {
    if (v < 0) throw ArgumentError("negative variable index in monomial");
    if (e < 0) throw ArgumentError("negative exponent in monomial");
    if (e == 0) continue;
    if (!m.entries_.empty() && m.entries_.back().first == v) {
      m.entries_.back().second += e;
    } else {
      m.entries_.emplace_back(v, e);
    }
  }
  return m;
}

Monomial Monomial::from_subset(EdgeSubset s) {
  Monomial m;
  for (int v : s.indices()) m.entries_.emplace_back(v, 1);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : entries_) d += e;
  return d;
}

int Monomial::exponent_of(int v) const {
  for (const auto& [var, e] : entries_) {
    if (var == v) return e;
    if (var > v) break;
  }
  return 0;
}

Monomial Monomial::times(const Monomial& o) const {
  std::vector<Entry> merged = entries_;
  merged.insert(merged.end(), o.entries_.begin(), o.entries_.end());
  return from_entries(std::move(merged));
}

std::string Monomial::str(const std::vector<std::string>* names) const {
  if (entries_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : entries_) {
    if (!out.empty()) out += "*";
    if (names) {
      out += names->at(v);
    } else {
      out += "A" + std::to_string(v + 1);
    }
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Walk both sorted entry lists; at the first variable where the exponents
  // differ, the monomial with the larger exponent is lexicographically larger.
  std::size_t i = 0, j = 0;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  while (i < ea.size() && j < eb.size()) {
    if (ea[i].first != eb[j].first) {
      // The side owning the smaller variable index has positive exponent on a
      // more significant variable, hence is lex-greater.
      return ea[i].first > eb[j].first;
    }
    if (ea[i].second != eb[j].second) return ea[i].second < eb[j].second;
    ++i;
    ++j;
  }
  return i == ea.size() && j < eb.size();
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw ArgumentError("negative variable count");
}

Polynomial Polynomial::constant(int nvars, Rational c) {
  Polynomial p(nvars);
  p.add_term(Monomial(), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int v) {
  if (v < 0 || v >= nvars) throw ArgumentError("variable index out of range");
  Polynomial p(nvars);
  p.add_term(Monomial::variable(v), 1);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->first.degree();  // leading term has maximal degree
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return false;
  }
  return true;
}

int Polynomial::max_exponent() const {
  int mx = 0;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.entries()) mx = std::max(mx, e);
  }
  return mx;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  if (m.max_variable() >= nvars_) throw ArgumentError("monomial variable beyond ring");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ != o.nvars_) throw ArgumentError("polynomial variable counts differ");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ != o.nvars_) throw ArgumentError("polynomial variable counts differ");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out(a.nvars_);
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw ArgumentError("polynomial variable counts differ");
  Polynomial out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(ma.times(mb), ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial out(p.nvars_);
  if (c.is_zero()) return out;
  for (const auto& [m, pc] : p.terms_) out.terms_.emplace(m, c * pc);
  return out;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) {
    throw ArgumentError("evaluation point has wrong length");
  }
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [v, e] : m.entries()) {
      term *= pow(point[v], static_cast<unsigned>(e));
      if (term.is_zero()) break;
    }
    acc += term;
  }
  return acc;
}

Polynomial Polynomial::partial(int v) const {
  if (v < 0 || v >= nvars_) throw ArgumentError("derivative variable out of range");
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m.exponent_of(v);
    if (e == 0) continue;
    std::vector<Monomial::Entry> entries = m.entries();
    for (auto& [var, exp] : entries) {
      if (var == v) --exp;
    }
    out.add_term(Monomial::from_entries(std::move(entries)), c * Rational(e));
  }
  return out;
}

Polynomial Polynomial::partial(const std::vector<int>& vars) const {
  Polynomial out = *this;
  for (int v : vars) out = out.partial(v);
  return out;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != nvars_) {
    throw ArgumentError("substitution needs one image per variable");
  }
  int target_vars = images.empty() ? 0 : images.front().nvars();
  for (const auto& img : images) {
    if (img.nvars() != target_vars) throw ArgumentError("substitution images disagree on ring");
  }
  Polynomial out(target_vars);
  for (const auto& [m, c] : terms_) {
    Polynomial term = Polynomial::constant(target_vars, c);
    for (const auto& [v, e] : m.entries()) {
      for (int i = 0; i < e; ++i) term = term * images[v];
    }
    out += term;
  }
  return out;
}

std::string Polynomial::str(const std::vector<std::string>* names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (m.is_constant()) {
      out += a.str();
    } else {
      if (!a.is_one()) out += a.str() + "*";
      out += m.str(names);
    }
  }
  return out;
}

std::optional<Rational> proportionality_constant(const Polynomial& p, const Polynomial& q) {
  if (p.nvars() != q.nvars()) throw ArgumentError("polynomial variable counts differ");
  if (q.is_zero()) {
    if (p.is_zero()) return Rational(1);
    return std::nullopt;
  }
  if (p.is_zero()) return std::nullopt;
  if (p.term_count() != q.term_count()) return std::nullopt;
  auto ip = p.terms().begin();
  auto iq = q.terms().begin();
  Rational ratio = ip->second / iq->second;
  for (; ip != p.terms().end(); ++ip, ++iq) {
    if (ip->first != iq->first) return std::nullopt;
    if (ip->second != ratio * iq->second) return std::nullopt;
  }
  return ratio;
}

}  // namespace confpoly
