#pragma once

#include "hwlab/poly.hpp"
#include "hwlab/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hwlab::io {

// Comma-separated rationals: "1, 1/2, 0.25". ParseError on junk or empty.
std::vector<Rational> parse_rational_list(std::string_view text);

// Polynomial as comma-separated "degree:coefficient" pairs, e.g.
// "2:1,3:-1/2" for x^2 - x^3/2. Duplicate degrees are a ParseError.
Poly parse_poly_spec(std::string_view text);

// Key-value document ("key: value" lines, # comments) with an `alpha`
// field holding a rational list.
std::vector<Rational> read_alpha_file(const std::string& path);

// CSV with columns p,mu (header optional); p must run 0,1,2,... without
// gaps. Returns the mu column.
std::vector<Rational> read_moments_csv(const std::string& path);

// RFC-style CSV field quoting: wraps in quotes when the value contains a
// comma, quote or newline, doubling embedded quotes.
std::string csv_field(std::string_view value);

} // namespace hwlab::io
