#include "poincare/records.hpp"

#include <charconv>
#include <cmath>
#include <regex>

#include "poincare/errors.hpp"

namespace poincare::records {

namespace {

double to_double(const std::string& s, const std::string& whole) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && *first == '+') ++first;
    const auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last || first == last)
        throw DomainError("cannot parse '" + whole + "' as a number");
    return v;
}

std::string shortest(double v) {
    char buf[64];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, p);
}

}  // namespace

Complex parse_complex(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != ' ') t += c;
    if (t.empty()) throw DomainError("empty complex number");
    static const std::regex num(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
    static const std::regex imag_only(R"(([+-]?)((\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)?[ij])");
    static const std::regex both(R"(([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)([+-])((\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)?[ij])");
    std::smatch m;
    if (std::regex_match(t, num)) return {to_double(t, text), 0.0};
    if (std::regex_match(t, m, imag_only)) {
        const double mag = m[2].matched ? to_double(m[2].str(), text) : 1.0;
        return {0.0, m[1].str() == "-" ? -mag : mag};
    }
    if (std::regex_match(t, m, both)) {
        const double re = to_double(m[1].str(), text);
        const double mag = m[5].matched ? to_double(m[5].str(), text) : 1.0;
        return {re, m[4].str() == "-" ? -mag : mag};
    }
    throw DomainError("cannot parse '" + text + "' as a complex number a+bi");
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        const auto p1 = text.find(':');
        const auto p2 = text.find(':', p1 + 1);
        if (p2 == std::string::npos || text.find(':', p2 + 1) != std::string::npos)
            throw DomainError("range '" + text + "' must be start:stop:count");
        const double a = to_double(text.substr(0, p1), text);
        const double b = to_double(text.substr(p1 + 1, p2 - p1 - 1), text);
        const double cnt = to_double(text.substr(p2 + 1), text);
        if (!(cnt >= 1.0) || cnt != std::floor(cnt) || cnt > 1e6)
            throw DomainError("range '" + text + "' needs a positive integer count");
        const auto n = static_cast<long>(cnt);
        for (long i = 0; i < n; ++i) out.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(i) / (n - 1));
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(to_double(item, text));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string format_complex(Complex z) {
    const std::string im = shortest(std::abs(z.imag()));
    if (z.imag() == 0.0 && !std::signbit(z.imag())) return shortest(z.real());
    return shortest(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + im + "i";
}

Json kernel_record(const geom::Point& z, const geom::Point& w, Complex s, double k, double R,
                   const kernels::KernelValue& v) {
    Json j;
    j["z"] = format_complex(z.complex());
    j["w"] = format_complex(w.complex());
    j["s_re"] = s.real();
    j["s_im"] = s.imag();
    j["k"] = k;
    j["R"] = R;
    j["value_re"] = v.value.real();
    j["value_im"] = v.value.imag();
    j["tail_bound"] = v.tail_bound;
    j["terms_used"] = v.terms_used;
    return j;
}

Json ball_rows(const fuchsian::BallResult& ball) {
    Json rows = Json::array();
    for (const auto& g : ball.elements) rows.push_back(Json::array({g.a, g.b, g.c, g.d}));
    return rows;
}

std::vector<fuchsian::GroupElement> parse_ball_rows(const Json& rows) {
    if (!rows.is_array()) throw DomainError("ball rows must be a JSON array");
    std::vector<fuchsian::GroupElement> out;
    for (const auto& r : rows) {
        if (!r.is_array() || r.size() != 4) throw DomainError("ball row must have four integers a,b,c,d");
        for (const auto& x : r)
            if (!x.is_number_integer()) throw DomainError("ball row entries must be integers");
        out.emplace_back(r[0].get<std::int64_t>(), r[1].get<std::int64_t>(), r[2].get<std::int64_t>(),
                         r[3].get<std::int64_t>());
    }
    return out;
}

}  // namespace poincare::records
