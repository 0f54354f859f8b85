#include "addcomb/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace addcomb {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::int64_t> parse_csv_ints(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = strip(tok);
        if (tok.empty()) throw std::invalid_argument("empty field in: " + s);
        out.push_back(std::stoll(tok));
    }
    return out;
}

GroupSpec parse_group_header(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty()) continue;
        if (line.rfind("group:", 0) != 0)
            throw std::invalid_argument("expected 'group:' header, got: " + line);
        return GroupSpec(parse_csv_ints(line.substr(6)));
    }
    throw std::invalid_argument("missing 'group:' header");
}

}  // namespace

GroupSet read_set(std::istream& in) {
    GroupSpec g = parse_group_header(in);
    GroupSet s(g);
    std::string line;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty()) continue;
        s.insert(g.from_coords(parse_csv_ints(line)));
    }
    return s;
}

GroupSet read_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open set file: " + path);
    return read_set(in);
}

void write_set(std::ostream& out, const GroupSet& s) {
    out << "group: " << s.group().str() << "\n";
    for (Element x : s.elements()) {
        auto c = s.group().coords(x);
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
        out << "\n";
    }
}

void write_set_file(const std::string& path, const GroupSet& s) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    write_set(out, s);
}

ComplexFunction read_function(std::istream& in) {
    GroupSpec g = parse_group_header(in);
    ComplexFunction f(g);
    std::string line;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty()) continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("expected 'coords : value' line: " + line);
        Element x = g.from_coords(parse_csv_ints(strip(line.substr(0, colon))));
        std::string val = strip(line.substr(colon + 1));
        std::size_t comma = val.find(',');
        if (comma == std::string::npos) {
            f.values[static_cast<std::size_t>(x)] = std::stod(val);
        } else {
            f.values[static_cast<std::size_t>(x)] = {std::stod(val.substr(0, comma)),
                                                     std::stod(val.substr(comma + 1))};
        }
    }
    return f;
}

ComplexFunction read_function_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open function file: " + path);
    return read_function(in);
}

void write_function(std::ostream& out, const ComplexFunction& f) {
    out << "group: " << f.group.str() << "\n";
    char buf[64];
    for (Element x = 0; x < f.group.order; ++x) {
        auto c = f.group.coords(x);
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
        auto v = f.values[static_cast<std::size_t>(x)];
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g", v.real(), v.imag());
        out << " : " << buf << "\n";
    }
}

void write_function(std::ostream& out, const DenseFunction& f) {
    out << "group: " << f.group.str() << "\n";
    for (Element x = 0; x < f.group.order; ++x) {
        auto c = f.group.coords(x);
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
        out << " : " << f.values[static_cast<std::size_t>(x)] << "\n";
    }
}

}  // namespace addcomb
