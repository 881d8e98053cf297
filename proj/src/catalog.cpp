#include "chiy/catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <vector>

namespace chiy {

ChernData projective_space(int n) {
    if (n < 0) throw std::invalid_argument("projective_space: negative dimension");
    ChernData data(n);
    for (const Partition& p : partitions_of(n)) {
        BigInt v = 1;
        for (int part : p.parts()) v *= binomial(n + 1, part);
        data.set_number(p, v);
    }
    return data;
}

ChernData hypersurface(int n, int k) {
    if (n < 0) throw std::invalid_argument("hypersurface: negative dimension");
    if (k < 1) throw std::invalid_argument("hypersurface: degree must be >= 1");
    // Chern class coefficients in h: (1+h)^{n+2} * (1 - kh + k^2 h^2 - ...)
    // truncated at h^n, by exact polynomial multiplication.
    std::vector<BigInt> c(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
        BigInt kpow = 1;  // (-k)^{i-j} built up below
        for (int j = i; j >= 0; --j) {
            c[i] += binomial(n + 2, j) * kpow;
            kpow *= -k;
        }
    }
    ChernData data(n);
    for (const Partition& p : partitions_of(n)) {
        BigInt v = k;  // integral of h^n over the hypersurface
        for (int part : p.parts()) v *= c[part];
        data.set_number(p, v);
    }
    return data;
}

namespace {

// All ways to split each part of `p` as i+j with i,j >= 0, accumulating the
// A-side and B-side partitions; contributes when the side weights match the
// factor dimensions exactly.
void split_parts(const Partition& p, size_t idx, std::vector<int>& left,
                 std::vector<int>& right, int left_weight,
                 const ChernData& a, const ChernData& b, BigInt& acc) {
    if (idx == p.parts().size()) {
        if (left_weight != a.dim()) return;
        const BigInt na = a.number(Partition(left));
        if (na == 0) return;
        acc += na * b.number(Partition(right));
        return;
    }
    const int part = p.parts()[idx];
    for (int i = 0; i <= part; ++i) {
        if (left_weight + i > a.dim()) continue;
        if (i > 0) left.push_back(i);
        if (part - i > 0) right.push_back(part - i);
        split_parts(p, idx + 1, left, right, left_weight + i, a, b, acc);
        if (i > 0) left.pop_back();
        if (part - i > 0) right.pop_back();
    }
}

}  // namespace

ChernData product(const ChernData& a, const ChernData& b) {
    const int d = a.dim() + b.dim();
    ChernData out(d);
    for (const Partition& p : partitions_of(d)) {
        BigInt acc = 0;
        std::vector<int> left, right;
        split_parts(p, 0, left, right, 0, a, b, acc);
        out.set_number(p, acc);
    }
    return out;
}

ManifoldSpec spec_projective(int n) {
    ManifoldSpec s;
    s.kind = ManifoldSpec::Kind::projective;
    s.n = n;
    return s;
}

ManifoldSpec spec_hypersurface(int n, int k) {
    ManifoldSpec s;
    s.kind = ManifoldSpec::Kind::hypersurface;
    s.n = n;
    s.k = k;
    return s;
}

ManifoldSpec spec_product(ManifoldSpec a, ManifoldSpec b) {
    ManifoldSpec s;
    s.kind = ManifoldSpec::Kind::product;
    s.a = std::make_shared<ManifoldSpec>(std::move(a));
    s.b = std::make_shared<ManifoldSpec>(std::move(b));
    return s;
}

ManifoldSpec spec_explicit(ChernData data, std::string name) {
    ManifoldSpec s;
    s.kind = ManifoldSpec::Kind::explicit_data;
    s.data = std::make_shared<ChernData>(std::move(data));
    s.name = std::move(name);
    return s;
}

namespace {

using nlohmann::json;

int require_int(const json& j, const std::string& key, const std::string& path) {
    if (!j.contains(key)) throw SpecError(path + "/" + key, "missing field");
    const json& v = j.at(key);
    if (!v.is_number_integer()) throw SpecError(path + "/" + key, "expected an integer");
    return v.get<int>();
}

ManifoldSpec parse_spec_json(const json& j, const std::string& path) {
    if (!j.is_object()) throw SpecError(path, "expected an object");
    if (!j.contains("kind")) throw SpecError(path + "/kind", "missing field");
    if (!j.at("kind").is_string()) throw SpecError(path + "/kind", "expected a string");
    const std::string kind = j.at("kind").get<std::string>();

    if (kind == "projective") {
        const int n = require_int(j, "n", path);
        if (n < 0) throw SpecError(path + "/n", "negative dimension");
        return spec_projective(n);
    }
    if (kind == "hypersurface") {
        const int n = require_int(j, "n", path);
        const int k = require_int(j, "k", path);
        if (n < 0) throw SpecError(path + "/n", "negative dimension");
        if (k < 1) throw SpecError(path + "/k", "degree must be >= 1");
        return spec_hypersurface(n, k);
    }
    if (kind == "product") {
        if (!j.contains("a")) throw SpecError(path + "/a", "missing field");
        if (!j.contains("b")) throw SpecError(path + "/b", "missing field");
        return spec_product(parse_spec_json(j.at("a"), path + "/a"),
                            parse_spec_json(j.at("b"), path + "/b"));
    }
    if (kind == "explicit") {
        const int dim = require_int(j, "dim", path);
        if (dim < 0) throw SpecError(path + "/dim", "negative dimension");
        if (!j.contains("chern")) throw SpecError(path + "/chern", "missing field");
        const json& chern = j.at("chern");
        if (!chern.is_object()) throw SpecError(path + "/chern", "expected an object");
        ChernData data(dim);
        for (const auto& [key, value] : chern.items()) {
            const std::string loc = path + "/chern/\"" + key + "\"";
            Partition p;
            try {
                p = Partition::parse(key);
            } catch (const std::invalid_argument& e) {
                throw SpecError(loc, e.what());
            }
            if (p.weight() != dim)
                throw SpecError(loc, "partition weight " + std::to_string(p.weight()) +
                                         " != dim " + std::to_string(dim));
            if (!value.is_number_integer())
                throw SpecError(loc, "expected an integer Chern number");
            if (data.numbers().contains(p) && data.number(p) != BigInt(value.get<long long>()))
                throw SpecError(loc, "duplicate partition key");
            data.set_number(p, BigInt(value.get<long long>()));
        }
        std::string name;
        if (j.contains("name")) {
            if (!j.at("name").is_string()) throw SpecError(path + "/name", "expected a string");
            name = j.at("name").get<std::string>();
        }
        return spec_explicit(std::move(data), std::move(name));
    }
    throw SpecError(path + "/kind", "unknown kind '" + kind + "'");
}

}  // namespace

ManifoldSpec parse_spec(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SpecError("", std::string("invalid JSON: ") + e.what());
    }
    return parse_spec_json(j, "");
}

namespace {

ManifoldSpec parse_id_tokens(const std::vector<std::string>& tok, size_t& pos) {
    auto take = [&](const char* what) -> const std::string& {
        if (pos >= tok.size())
            throw SpecError("manifold id", std::string("missing ") + what);
        return tok[pos++];
    };
    auto take_int = [&](const char* what) {
        const std::string& s = take(what);
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw SpecError("manifold id", std::string(what) + " is not a number: '" + s + "'");
        }
        if (used != s.size())
            throw SpecError("manifold id", std::string(what) + " is not a number: '" + s + "'");
        return v;
    };

    const std::string& head = take("manifold kind");
    if (head == "cp") {
        const int n = take_int("n");
        if (n < 0) throw SpecError("manifold id", "negative dimension");
        return spec_projective(n);
    }
    if (head == "hyp") {
        const int n = take_int("n");
        const int k = take_int("k");
        if (n < 0) throw SpecError("manifold id", "negative dimension");
        if (k < 1) throw SpecError("manifold id", "degree must be >= 1");
        return spec_hypersurface(n, k);
    }
    if (head == "prod") {
        ManifoldSpec a = parse_id_tokens(tok, pos);
        ManifoldSpec b = parse_id_tokens(tok, pos);
        return spec_product(std::move(a), std::move(b));
    }
    throw SpecError("manifold id", "unknown kind '" + head + "'");
}

}  // namespace

ManifoldSpec parse_manifold_id(const std::string& id) {
    std::vector<std::string> tok;
    size_t pos = 0;
    while (pos <= id.size()) {
        const size_t colon = std::min(id.find(':', pos), id.size());
        tok.push_back(id.substr(pos, colon - pos));
        pos = colon + 1;
    }
    size_t i = 0;
    ManifoldSpec s = parse_id_tokens(tok, i);
    if (i != tok.size())
        throw SpecError("manifold id", "unexpected trailing tokens in '" + id + "'");
    return s;
}

ChernData realize(const ManifoldSpec& spec) {
    switch (spec.kind) {
        case ManifoldSpec::Kind::projective: return projective_space(spec.n);
        case ManifoldSpec::Kind::hypersurface: return hypersurface(spec.n, spec.k);
        case ManifoldSpec::Kind::product: return product(realize(*spec.a), realize(*spec.b));
        case ManifoldSpec::Kind::explicit_data: return *spec.data;
    }
    throw std::logic_error("realize: unreachable");
}

std::string spec_name(const ManifoldSpec& spec) {
    if (!spec.name.empty()) return spec.name;
    switch (spec.kind) {
        case ManifoldSpec::Kind::projective: return "cp:" + std::to_string(spec.n);
        case ManifoldSpec::Kind::hypersurface:
            return "hyp:" + std::to_string(spec.n) + ":" + std::to_string(spec.k);
        case ManifoldSpec::Kind::product:
            return "prod:" + spec_name(*spec.a) + ":" + spec_name(*spec.b);
        case ManifoldSpec::Kind::explicit_data:
            return "explicit:" + std::to_string(spec.data->dim());
    }
    throw std::logic_error("spec_name: unreachable");
}

std::optional<HodgeTable> hodge_table_for(const ManifoldSpec& spec) {
    switch (spec.kind) {
        case ManifoldSpec::Kind::projective: {
            HodgeTable t(spec.n);
            for (int j = 0; j <= spec.n; ++j) t.set_b(j, j, 1);
            return t;
        }
        case ManifoldSpec::Kind::product: {
            const auto ta = hodge_table_for(*spec.a);
            const auto tb = hodge_table_for(*spec.b);
            if (!ta || !tb) return std::nullopt;
            HodgeTable t(ta->dim() + tb->dim());
            for (int i = 0; i <= ta->dim(); ++i)
                for (int j = 0; j <= ta->dim(); ++j)
                    for (int p = 0; p <= tb->dim(); ++p)
                        for (int q = 0; q <= tb->dim(); ++q)
                            t.set_b(i + p, j + q,
                                    t.b(i + p, j + q) + ta->b(i, j) * tb->b(p, q));
            return t;
        }
        default: return std::nullopt;
    }
}

}  // namespace chiy
