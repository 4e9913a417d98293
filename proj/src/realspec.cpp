#include "wiltonlab/realspec.hpp"

#include "wiltonlab/rng.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace wiltonlab {

namespace {

using float50 = boost::multiprecision::cpp_bin_float_50;

// Stream tag reserved for "dyadic:<seed>" draws so they never collide with
// sample streams used elsewhere.
constexpr std::uint32_t kDyadicDrawTag = 0x64796164u;  // "dyad"

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

bool all_hex_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isxdigit(c); });
}

bigint parse_bigint_dec(std::string_view s, const std::string& what) {
  if (!all_digits(s)) throw parse_error("expected decimal integer in " + what);
  if (s.size() > 1 && s[0] == '0')
    throw parse_error("leading zeros not allowed in " + what);
  return bigint(std::string(s));
}

std::uint64_t parse_u64(std::string_view s, const std::string& what) {
  if (!all_digits(s)) throw parse_error("expected integer in " + what);
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw parse_error("integer out of range in " + what);
  return v;
}

// Value of [0; a_1, a_2, ...] by backward evaluation of the first n_terms
// coefficients of prefix followed by the repeating cycle. With >= 160 terms
// the truncation error is below 1/F_160^2 ~ 1e-66, beyond float50 precision.
float50 cf_value_f50(const std::vector<std::uint64_t>& prefix,
                     const std::vector<std::uint64_t>& cycle,
                     std::size_t n_terms) {
  std::vector<std::uint64_t> a;
  a.reserve(n_terms);
  for (std::size_t i = 0; i < prefix.size() && a.size() < n_terms; ++i)
    a.push_back(prefix[i]);
  while (!cycle.empty() && a.size() < n_terms)
    for (std::size_t i = 0; i < cycle.size() && a.size() < n_terms; ++i)
      a.push_back(cycle[i]);
  float50 x = 0;
  for (std::size_t i = a.size(); i-- > 0;) x = 1 / (float50(a[i]) + x);
  return x;
}

real_spec parse_cf(const std::string& text) {
  // "[0;2,4,3]" or "[0;2,(1,2)]" or "[0;(1)]"
  if (text.size() < 4 || text.front() != '[' || text.back() != ']')
    throw parse_error("malformed continued fraction: " + text);
  std::string body = text.substr(1, text.size() - 2);
  auto semi = body.find(';');
  if (semi == std::string::npos)
    throw parse_error("continued fraction needs 'a0;' part: " + text);
  std::string head = body.substr(0, semi);
  if (head != "0") {
    if (!all_digits(head))
      throw parse_error("malformed continued fraction head: " + text);
    throw domain_error("continued fraction must start [0;...] for x in (0,1]");
  }
  std::string rest = body.substr(semi + 1);
  if (rest.empty()) throw domain_error("empty continued fraction represents 0");

  std::vector<std::uint64_t> prefix, cycle;
  bool in_cycle = false, cycle_closed = false;
  std::size_t pos = 0;
  while (pos < rest.size()) {
    if (cycle_closed)
      throw parse_error("trailing input after periodic tail: " + text);
    if (!in_cycle && rest[pos] == '(') {
      in_cycle = true;
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < rest.size() && std::isdigit(static_cast<unsigned char>(rest[end])))
      ++end;
    if (end == pos) throw parse_error("malformed continued fraction: " + text);
    std::uint64_t a = parse_u64(rest.substr(pos, end - pos), "continued fraction");
    if (a == 0)
      throw domain_error("continued fraction coefficients must be >= 1");
    (in_cycle ? cycle : prefix).push_back(a);
    pos = end;
    if (pos < rest.size() && rest[pos] == ')') {
      if (!in_cycle) throw parse_error("unmatched ')' in " + text);
      cycle_closed = true;
      ++pos;
      continue;
    }
    if (pos < rest.size()) {
      if (rest[pos] != ',') throw parse_error("malformed continued fraction: " + text);
      ++pos;
      if (pos == rest.size() || rest[pos] == ')')
        throw parse_error("malformed continued fraction: " + text);
    }
  }
  if (in_cycle && !cycle_closed) throw parse_error("unterminated '(' in " + text);
  return make_cf(std::move(prefix), std::move(cycle));
}

real_spec parse_decimal(const std::string& text) {
  auto dot = text.find('.');
  std::string ipart = text.substr(0, dot);
  std::string fpart = text.substr(dot + 1);
  if (ipart.empty()) ipart = "0";
  if (fpart.empty() || !all_digits(fpart) || !all_digits(ipart))
    throw parse_error("malformed decimal: " + text);
  bigint den = 1;
  for (std::size_t i = 0; i < fpart.size(); ++i) den *= 10;
  bigint num = bigint(ipart) * den + bigint(fpart);
  if (num == 0) throw domain_error("0 is outside (0,1]");
  if (num > den) throw domain_error(text + " is outside (0,1]");
  return make_rational(num, den);
}

}  // namespace

real_spec make_rational(bigint num, bigint den) {
  if (den <= 0) throw domain_error("denominator must be positive");
  if (num <= 0) throw domain_error("value must be positive");
  if (num > den) throw domain_error("value exceeds 1");
  bigint g = gcd(num, den);
  real_spec s;
  s.kind = spec_kind::rational;
  s.num = num / g;
  s.den = den / g;
  return s;
}

real_spec make_dyadic(bigint bits, int width) {
  if (width < 1 || width > 4096) throw domain_error("dyadic width out of range");
  bigint den = bigint(1) << width;
  if (bits <= 0 || bits >= den)
    throw domain_error("dyadic bits must satisfy 0 < bits < 2^width");
  real_spec s;
  s.kind = spec_kind::dyadic;
  s.num = std::move(bits);
  s.den = std::move(den);
  s.width = width;
  return s;
}

real_spec make_cf(std::vector<std::uint64_t> prefix,
                  std::vector<std::uint64_t> cycle) {
  for (auto a : prefix)
    if (a == 0) throw domain_error("continued fraction coefficients must be >= 1");
  for (auto a : cycle)
    if (a == 0) throw domain_error("continued fraction coefficients must be >= 1");
  real_spec s;
  if (cycle.empty()) {
    if (prefix.empty()) throw domain_error("empty continued fraction represents 0");
    s.kind = spec_kind::cf_terminating;
    // fold the convergent recurrence to recover the exact fraction
    bigint p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // p_{-1}/q_{-1}, p_0/q_0
    for (auto a : prefix) {
      bigint p2 = bigint(a) * p1 + p0;
      bigint q2 = bigint(a) * q1 + q0;
      p0 = std::move(p1);
      q0 = std::move(q1);
      p1 = std::move(p2);
      q1 = std::move(q2);
    }
    s.num = std::move(p1);
    s.den = std::move(q1);
  } else {
    s.kind = spec_kind::cf_periodic;
  }
  s.prefix = std::move(prefix);
  s.cycle = std::move(cycle);
  return s;
}

real_spec parse_real(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  if (text.empty()) throw parse_error("empty real specifier");

  if (text.front() == '[') return parse_cf(text);

  if (text.rfind("dyadic:", 0) == 0) {
    std::uint64_t seed = parse_u64(text.substr(7), "dyadic seed");
    sample_rng rng(seed, 0, kDyadicDrawTag);
    return make_dyadic(bigint(rng.next_dyadic_bits(64)), 64);
  }

  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string lhs = text.substr(0, slash);
    std::string rhs = text.substr(slash + 1);
    if (rhs.rfind("2^", 0) == 0) {
      // dyadic "0xBITS/2^WIDTH" (bits may also be decimal)
      bigint bits;
      if (lhs.rfind("0x", 0) == 0 || lhs.rfind("0X", 0) == 0) {
        if (!all_hex_digits(std::string_view(lhs).substr(2)))
          throw parse_error("malformed hex bits: " + lhs);
        bits = bigint("0x" + lhs.substr(2));
      } else {
        bits = parse_bigint_dec(lhs, "dyadic bits");
      }
      std::uint64_t w = parse_u64(rhs.substr(2), "dyadic width");
      if (w < 1 || w > 4096) throw domain_error("dyadic width out of range");
      return make_dyadic(std::move(bits), static_cast<int>(w));
    }
    bigint num = parse_bigint_dec(lhs, "fraction");
    bigint den = parse_bigint_dec(rhs, "fraction");
    return make_rational(std::move(num), std::move(den));
  }

  if (text.find('.') != std::string::npos) return parse_decimal(text);

  bigint n = parse_bigint_dec(text, "real specifier");
  if (n == 0) throw domain_error("0 is outside (0,1]");
  if (n > 1) throw domain_error(text + " is outside (0,1]");
  return make_rational(1, 1);
}

std::string format_real(const real_spec& s) {
  switch (s.kind) {
    case spec_kind::rational:
      return s.num.str() + "/" + s.den.str();
    case spec_kind::dyadic: {
      std::ostringstream os;
      os << "0x" << std::hex << std::uppercase << s.num << std::dec << "/2^"
         << s.width;
      return os.str();
    }
    case spec_kind::cf_terminating:
    case spec_kind::cf_periodic: {
      std::string out = "[0;";
      for (std::size_t i = 0; i < s.prefix.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.prefix[i]);
      }
      if (!s.cycle.empty()) {
        if (!s.prefix.empty()) out += ',';
        out += '(';
        for (std::size_t i = 0; i < s.cycle.size(); ++i) {
          if (i) out += ',';
          out += std::to_string(s.cycle[i]);
        }
        out += ')';
      }
      out += ']';
      return out;
    }
  }
  return {};
}

double approx_double(const real_spec& s) {
  if (s.is_rational_value()) {
    if (s.num == 0) return 0.0;
    return static_cast<double>(float50(s.num) / float50(s.den));
  }
  return static_cast<double>(cf_value_f50(s.prefix, s.cycle, s.prefix.size() + 192));
}

double log_inv_approx(const real_spec& s) {
  if (s.is_rational_value()) {
    if (s.num == 0) throw domain_error("log_inv_approx: zero argument");
    return static_cast<double>(log(float50(s.den)) - log(float50(s.num)));
  }
  return static_cast<double>(
      -log(cf_value_f50(s.prefix, s.cycle, s.prefix.size() + 192)));
}

real_spec gauss_map(const real_spec& s) {
  if (s.is_zero()) throw domain_error("gauss map needs x > 0");
  if (s.is_one()) throw domain_error("gauss map needs x < 1");
  switch (s.kind) {
    case spec_kind::rational:
    case spec_kind::dyadic: {
      bigint r = s.den % s.num;
      if (r == 0) {
        real_spec zero;
        zero.num = 0;
        zero.den = 1;
        return zero;
      }
      return make_rational(std::move(r), s.num);
    }
    case spec_kind::cf_terminating: {
      if (s.prefix.size() == 1) {
        real_spec zero;
        zero.num = 0;
        zero.den = 1;
        return zero;
      }
      return make_cf({s.prefix.begin() + 1, s.prefix.end()}, {});
    }
    case spec_kind::cf_periodic: {
      if (!s.prefix.empty())
        return make_cf({s.prefix.begin() + 1, s.prefix.end()}, s.cycle);
      std::vector<std::uint64_t> rotated(s.cycle.begin() + 1, s.cycle.end());
      rotated.push_back(s.cycle.front());
      return make_cf({}, std::move(rotated));
    }
  }
  throw domain_error("unreachable");
}

}  // namespace wiltonlab
