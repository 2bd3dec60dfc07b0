#pragma once

// Command-line value parsing and the JSON shapes of kernel records and balls.

#include <string>
#include <vector>

#include <json.hpp>

#include "poincare/fuchsian.hpp"
#include "poincare/kernels.hpp"

namespace poincare::records {

using Json = nlohmann::ordered_json;

/// "a+bi", "a-bi", "bi", "i", "-i", "a". Throws DomainError on anything else.
Complex parse_complex(const std::string& text);

/// "x1,x2,..." or "start:stop:count" (count >= 1, endpoints included).
std::vector<double> parse_grid(const std::string& text);

/// Shortest round-trip form, e.g. "0.3+1.7i".
std::string format_complex(Complex z);

/// {z, w, s_re, s_im, k, R, value_re, value_im, tail_bound, terms_used}.
Json kernel_record(const geom::Point& z, const geom::Point& w, Complex s, double k, double R,
                   const kernels::KernelValue& v);

/// Rows [a, b, c, d] in canonical order.
Json ball_rows(const fuchsian::BallResult& ball);

/// Inverse of ball_rows; DomainError on malformed rows.
std::vector<fuchsian::GroupElement> parse_ball_rows(const Json& rows);

}  // namespace poincare::records
