#include "addcomb/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace addcomb {

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

Report Report::boolean(bool b) {
    Report r;
    r.kind_ = Kind::Bool;
    r.b_ = b;
    return r;
}

Report Report::integer(std::int64_t v) {
    Report r;
    r.kind_ = Kind::Int;
    r.i_ = v;
    return r;
}

Report Report::real(double v) {
    Report r;
    r.kind_ = Kind::Real;
    r.d_ = v;
    return r;
}

Report Report::str(std::string s) {
    Report r;
    r.kind_ = Kind::Str;
    r.s_ = std::move(s);
    return r;
}

Report Report::array() {
    Report r;
    r.kind_ = Kind::Arr;
    return r;
}

Report Report::object() {
    Report r;
    r.kind_ = Kind::Obj;
    return r;
}

Report& Report::set(const std::string& key, Report v) {
    if (kind_ != Kind::Obj) throw std::logic_error("Report::set on non-object");
    fields_.emplace_back(key, std::move(v));
    return *this;
}

Report& Report::push(Report v) {
    if (kind_ != Kind::Arr) throw std::logic_error("Report::push on non-array");
    items_.push_back(std::move(v));
    return *this;
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
}

}  // namespace

void Report::write_json(std::string& out) const {
    switch (kind_) {
        case Kind::Null: out += "null"; break;
        case Kind::Bool: out += b_ ? "true" : "false"; break;
        case Kind::Int: out += std::to_string(i_); break;
        case Kind::Real: out += format_real(d_); break;
        case Kind::Str: write_escaped(out, s_); break;
        case Kind::Arr: {
            out += '[';
            for (std::size_t i = 0; i < items_.size(); ++i) {
                if (i) out += ',';
                items_[i].write_json(out);
            }
            out += ']';
            break;
        }
        case Kind::Obj: {
            out += '{';
            for (std::size_t i = 0; i < fields_.size(); ++i) {
                if (i) out += ',';
                write_escaped(out, fields_[i].first);
                out += ':';
                fields_[i].second.write_json(out);
            }
            out += '}';
            break;
        }
    }
}

std::string Report::to_json() const {
    std::string out;
    write_json(out);
    return out;
}

std::string Report::to_csv() const {
    if (kind_ != Kind::Obj) throw std::logic_error("to_csv: top level must be an object");
    std::string header, row;
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (i) {
            header += ',';
            row += ',';
        }
        header += fields_[i].first;
        const Report& v = fields_[i].second;
        switch (v.kind_) {
            case Kind::Bool: row += v.b_ ? "true" : "false"; break;
            case Kind::Int: row += std::to_string(v.i_); break;
            case Kind::Real: row += format_real(v.d_); break;
            case Kind::Str: row += v.s_; break;
            default: {
                std::string cell = v.to_json();
                std::string quoted = "\"";
                for (char c : cell) {
                    if (c == '"') quoted += "\"\"";
                    else quoted += c;
                }
                quoted += '"';
                row += quoted;
            }
        }
    }
    return header + "\n" + row + "\n";
}

}  // namespace addcomb
