#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "addcomb/rational.hpp"

namespace addcomb {

// Order-preserving JSON value with deterministic serialization: floats at
// 12 significant digits, rationals as "p/q" strings.
class Report {
public:
    enum class Kind { Null, Bool, Int, Real, Str, Arr, Obj };

    Report() : kind_(Kind::Null) {}
    static Report boolean(bool b);
    static Report integer(std::int64_t v);
    static Report real(double v);
    static Report str(std::string s);
    static Report rational(const Rational& r) { return str(r.str()); }
    static Report array();
    static Report object();

    Report& set(const std::string& key, Report v);  // object only
    Report& push(Report v);                         // array only

    std::string to_json() const;
    // Header row of top-level keys plus one data row; nested values are
    // JSON-encoded into their cell.
    std::string to_csv() const;

private:
    Kind kind_;
    bool b_ = false;
    std::int64_t i_ = 0;
    double d_ = 0;
    std::string s_;
    std::vector<std::pair<std::string, Report>> fields_;
    std::vector<Report> items_;

    void write_json(std::string& out) const;
};

std::string format_real(double v);  // %.12g

}  // namespace addcomb
