#include "fgfp/problem.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace fgfp {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

struct Entry {
    std::size_t line;
    std::string value;
    bool used = false;
};

class KeyTable {
public:
    void insert(std::size_t line, const std::string& key, const std::string& value) {
        if (entries_.count(key))
            throw parse_error(line, "duplicate key '" + key + "'");
        entries_[key] = {line, value, false};
    }

    const Entry* find(const std::string& key) {
        auto it = entries_.find(key);
        if (it == entries_.end()) return nullptr;
        it->second.used = true;
        return &it->second;
    }

    std::string require(const std::string& key) {
        const Entry* e = find(key);
        if (!e) throw parse_error(1, "missing required key '" + key + "'");
        return e->value;
    }

    bool has_section(const std::string& section) const {
        const std::string prefix = section + ".";
        for (const auto& [k, v] : entries_)
            if (k.rfind(prefix, 0) == 0) return true;
        return false;
    }

    void reject_unused() const {
        for (const auto& [k, e] : entries_)
            if (!e.used) throw parse_error(e.line, "unknown key '" + k + "'");
    }

private:
    std::map<std::string, Entry> entries_;
};

double number_at(std::size_t line, const std::string& token) {
    try {
        return parse_number(token);
    } catch (const std::exception& ex) {
        throw parse_error(line, ex.what());
    }
}

std::vector<double> parse_vector(std::size_t line, const std::string& text) {
    std::vector<double> out;
    for (const auto& tok : split(text, ',')) out.push_back(number_at(line, tok));
    return out;
}

Matrix parse_matrix(std::size_t line, const std::string& text) {
    Matrix out;
    for (const auto& row : split(text, ';')) out.push_back(parse_vector(line, row));
    return out;
}

SpaceDescriptor parse_space(KeyTable& keys, const std::string& section) {
    const Entry* dim_e = keys.find(section + ".dim");
    if (!dim_e) throw parse_error(1, "missing section '" + section + "'");
    const std::size_t dim = std::stoul(dim_e->value);
    if (dim == 0) throw parse_error(dim_e->line, section + ".dim must be positive");
    const Entry* lo = keys.find(section + ".lower");
    const Entry* hi = keys.find(section + ".upper");
    if (!lo || !hi)
        throw parse_error(dim_e->line, section + " needs lower and upper edges");
    auto lov = parse_vector(lo->line, lo->value);
    auto hiv = parse_vector(hi->line, hi->value);
    if (lov.size() != dim || hiv.size() != dim)
        throw parse_error(lo->line, section + ": edge vectors must have length dim");
    try {
        return SpaceDescriptor(std::move(lov), std::move(hiv));
    } catch (const input_error& ex) {
        throw parse_error(lo->line, ex.what());
    }
}

MapSpec parse_map(KeyTable& keys, const std::string& section, std::size_t dim_out,
                  std::size_t dim_first, std::size_t dim_second) {
    const Entry* kind_e = keys.find(section + ".kind");
    if (!kind_e) throw parse_error(1, "missing section '" + section + "'");
    const std::string kind = kind_e->value;
    if (kind == "builtin") {
        const Entry* name = keys.find(section + ".name");
        if (!name) throw parse_error(kind_e->line, section + ".name required for builtin");
        try {
            builtin_map(name->value);
        } catch (const config_error& ex) {
            throw parse_error(name->line, ex.what());
        }
        return MapSpec::builtin(name->value);
    }
    if (kind != "affine")
        throw parse_error(kind_e->line, section + ".kind must be 'affine' or 'builtin'");

    const Entry* a = keys.find(section + ".A");
    const Entry* b = keys.find(section + ".B");
    if (!a || !b) throw parse_error(kind_e->line, section + " needs A and B matrices");
    Matrix A = parse_matrix(a->line, a->value);
    Matrix B = parse_matrix(b->line, b->value);
    std::vector<double> offset(dim_out, 0.0);
    if (const Entry* off = keys.find(section + ".offset")) {
        offset = parse_vector(off->line, off->value);
        if (offset.size() != dim_out)
            throw parse_error(off->line, section + ".offset must have length " +
                                             std::to_string(dim_out));
    }
    auto check = [&](const Matrix& mat, std::size_t cols, const char* which) {
        if (mat.size() != dim_out)
            throw parse_error(a->line, section + "." + which + " must have " +
                                           std::to_string(dim_out) + " rows");
        for (const auto& row : mat)
            if (row.size() != cols)
                throw parse_error(a->line, section + "." + which + " must have " +
                                               std::to_string(cols) + " columns");
    };
    check(A, dim_first, "A");
    check(B, dim_second, "B");
    return MapSpec::affine(std::move(A), std::move(B), std::move(offset));
}

std::optional<ContractionClass> parse_class(KeyTable& keys) {
    const Entry* type = keys.find("class.type");
    if (!type) {
        if (keys.has_section("class"))
            throw parse_error(1, "class block present but class.type missing");
        return std::nullopt;
    }
    ClassTag tag;
    try {
        tag = class_tag_from_string(type->value);
    } catch (const config_error& ex) {
        throw parse_error(type->line, ex.what());
    }
    auto constant = [&](const char* name) {
        const Entry* e = keys.find(std::string("class.") + name);
        if (!e)
            throw parse_error(type->line,
                              std::string("class.") + name + " required for " + type->value);
        return number_at(e->line, e->value);
    };
    ContractionClass cls;
    switch (tag) {
        case ClassTag::banach:
            cls = ContractionClass::banach(constant("k"), constant("l"), constant("m"),
                                           constant("n"));
            break;
        case ClassTag::kannan:
            cls = ContractionClass::kannan(constant("k"), constant("l"), constant("m"),
                                           constant("n"));
            break;
        case ClassTag::chatterjea:
            cls = ContractionClass::chatterjea(constant("k"), constant("l"),
                                               constant("m"), constant("n"));
            break;
        case ClassTag::reich:
            cls = ContractionClass::reich(constant("a"), constant("b"), constant("c"));
            break;
        case ClassTag::hybrid:
            cls = ContractionClass::hybrid(constant("a"), constant("b"), constant("c"));
            break;
        case ClassTag::quasi:
            cls = ContractionClass::quasi(constant("k"), constant("l"));
            break;
    }
    const std::string err = cls.admissibility_error();
    if (!err.empty()) throw parse_error(type->line, "admissibility error: " + err);
    return cls;
}

std::string format_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_vector(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += format_number(v[i]);
    }
    return s;
}

std::string format_matrix(const Matrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += "; ";
        s += format_vector(m[i]);
    }
    return s;
}

}  // namespace

double parse_number(const std::string& token) {
    const std::string t = trim(token);
    if (t.empty()) throw input_error("empty numeric literal");
    if (t == "inf" || t == "+inf") return std::numeric_limits<double>::infinity();
    if (t == "-inf") return -std::numeric_limits<double>::infinity();
    const auto slash = t.find('/');
    if (slash != std::string::npos) {
        const std::string ps = trim(t.substr(0, slash));
        const std::string qs = trim(t.substr(slash + 1));
        std::size_t ppos = 0, qpos = 0;
        const double p = std::stod(ps, &ppos);
        const double q = std::stod(qs, &qpos);
        if (ppos != ps.size() || qpos != qs.size() || q == 0.0)
            throw input_error("bad rational literal '" + t + "'");
        return p / q;
    }
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(t, &pos);
    } catch (const std::exception&) {
        throw input_error("bad numeric literal '" + t + "'");
    }
    if (pos != t.size()) throw input_error("bad numeric literal '" + t + "'");
    return v;
}

ProblemFile parse_problem(const std::string& text) {
    KeyTable keys;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    std::size_t content_lines = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        ++content_lines;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error(lineno, "expected 'section.key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.find('.') == std::string::npos)
            throw parse_error(lineno, "key must be 'section.key'");
        keys.insert(lineno, key, value);
    }
    if (content_lines == 0) throw parse_error(1, "empty problem file");

    ProblemFile p;
    p.pair.X = parse_space(keys, "space_X");
    p.pair.Y = parse_space(keys, "space_Y");
    const std::size_t dx = p.pair.X.dim(), dy = p.pair.Y.dim();
    p.pair.F = parse_map(keys, "map_F", dx, dx, dy);
    p.pair.G = parse_map(keys, "map_G", dy, dy, dx);
    p.cls = parse_class(keys);

    if (const Entry* sx = keys.find("seed_point.x")) {
        const Entry* sy = keys.find("seed_point.y");
        if (!sy) throw parse_error(sx->line, "seed_point needs both x and y");
        ProductPoint seed;
        seed.x = Point(parse_vector(sx->line, sx->value));
        seed.y = Point(parse_vector(sy->line, sy->value));
        if (seed.x.dim() != dx || seed.y.dim() != dy)
            throw parse_error(sx->line, "seed_point dimension mismatch");
        p.seed_point = seed;
    } else if (keys.has_section("seed_point")) {
        throw parse_error(1, "seed_point block present but seed_point.x missing");
    }

    if (keys.has_section("solve")) {
        p.has_solve_block = true;
        if (const Entry* e = keys.find("solve.tol_step"))
            p.solve.tol_step = number_at(e->line, e->value);
        if (const Entry* e = keys.find("solve.tol_residual"))
            p.solve.tol_residual = number_at(e->line, e->value);
        if (const Entry* e = keys.find("solve.max_iter"))
            p.solve.max_iter = std::stoul(e->value);
        if (const Entry* e = keys.find("solve.hypothesis_mode")) {
            try {
                p.solve.mode = hypothesis_mode_from_string(e->value);
            } catch (const config_error& ex) {
                throw parse_error(e->line, ex.what());
            }
        }
        try {
            p.solve.validate();
        } catch (const config_error& ex) {
            throw parse_error(1, ex.what());
        }
    }

    keys.reject_unused();
    return p;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open problem file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

std::string emit_problem(const ProblemFile& p) {
    std::ostringstream os;
    auto space = [&](const char* section, const SpaceDescriptor& s) {
        os << section << ".dim = " << s.dim() << "\n";
        os << section << ".lower = " << format_vector(s.lower) << "\n";
        os << section << ".upper = " << format_vector(s.upper) << "\n";
    };
    auto map = [&](const char* section, const MapSpec& m) {
        if (m.kind == MapKind::builtin) {
            os << section << ".kind = builtin\n";
            os << section << ".name = " << m.name << "\n";
        } else {
            os << section << ".kind = affine\n";
            os << section << ".A = " << format_matrix(m.A) << "\n";
            os << section << ".B = " << format_matrix(m.B) << "\n";
            os << section << ".offset = " << format_vector(m.offset) << "\n";
        }
    };
    space("space_X", p.pair.X);
    space("space_Y", p.pair.Y);
    map("map_F", p.pair.F);
    map("map_G", p.pair.G);
    if (p.cls) {
        const ContractionClass& c = *p.cls;
        os << "class.type = " << to_string(c.tag) << "\n";
        switch (c.tag) {
            case ClassTag::banach:
            case ClassTag::kannan:
            case ClassTag::chatterjea:
                os << "class.k = " << format_number(c.k) << "\n";
                os << "class.l = " << format_number(c.l) << "\n";
                os << "class.m = " << format_number(c.m) << "\n";
                os << "class.n = " << format_number(c.n) << "\n";
                break;
            case ClassTag::reich:
            case ClassTag::hybrid:
                os << "class.a = " << format_number(c.a) << "\n";
                os << "class.b = " << format_number(c.b) << "\n";
                os << "class.c = " << format_number(c.c) << "\n";
                break;
            case ClassTag::quasi:
                os << "class.k = " << format_number(c.k) << "\n";
                os << "class.l = " << format_number(c.l) << "\n";
                break;
        }
    }
    if (p.seed_point) {
        os << "seed_point.x = " << format_vector(p.seed_point->x.coords) << "\n";
        os << "seed_point.y = " << format_vector(p.seed_point->y.coords) << "\n";
    }
    if (p.has_solve_block) {
        os << "solve.tol_step = " << format_number(p.solve.tol_step) << "\n";
        os << "solve.tol_residual = " << format_number(p.solve.tol_residual) << "\n";
        os << "solve.max_iter = " << p.solve.max_iter << "\n";
        os << "solve.hypothesis_mode = " << to_string(p.solve.mode) << "\n";
    }
    return os.str();
}

}  // namespace fgfp
