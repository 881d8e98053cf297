#pragma once

#include <memory>
#include <optional>
#include <string>

#include "chiy/genus.hpp"

namespace chiy {

// Validation failure in a manifold spec; `where` points at the faulty field.
class SpecError : public std::invalid_argument {
public:
    SpecError(std::string where, const std::string& what)
        : std::invalid_argument(where.empty() ? what : where + ": " + what),
          where_(std::move(where)) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

struct ManifoldSpec {
    enum class Kind { projective, hypersurface, product, explicit_data };

    Kind kind = Kind::projective;
    int n = 0;                         // projective, hypersurface
    int k = 1;                         // hypersurface degree
    std::shared_ptr<ManifoldSpec> a;   // product factors
    std::shared_ptr<ManifoldSpec> b;
    std::shared_ptr<ChernData> data;   // explicit_data
    std::string name;                  // optional display name
};

// Chern numbers of CP^n: c_lambda = prod_i binom(n+1, lambda_i).
ChernData projective_space(int n);

// Degree-k hypersurface in CP^{n+1} by adjunction: total Chern class
// (1+h)^{n+2}/(1+kh) truncated at h^n, with integral of h^n equal to k.
ChernData hypersurface(int n, int k);

// Chern numbers of a product manifold via the Whitney formula and
// bidegree selection.
ChernData product(const ChernData& a, const ChernData& b);

// Builders for the spec tree.
ManifoldSpec spec_projective(int n);
ManifoldSpec spec_hypersurface(int n, int k);
ManifoldSpec spec_product(ManifoldSpec a, ManifoldSpec b);
ManifoldSpec spec_explicit(ChernData data, std::string name = "");

// Parse a JSON document:
//   {"kind":"projective","n":2}
//   {"kind":"hypersurface","n":2,"k":4}
//   {"kind":"product","a":{...},"b":{...}}
//   {"kind":"explicit","dim":2,"chern":{"1,1":0,"2":24},"name":"K3"}
// Throws SpecError naming the faulty field.
ManifoldSpec parse_spec(const std::string& json_text);

// Parse a builtin id: cp:<n>, hyp:<n>:<k>, prod:<id>:<id> (prod nests).
ManifoldSpec parse_manifold_id(const std::string& id);

ChernData realize(const ManifoldSpec& spec);

// Display name: the given name if any, else the canonical id.
std::string spec_name(const ManifoldSpec& spec);

// Hodge table when one is known: diagonal 1s for projective spaces,
// Kuenneth products of known tables.
std::optional<HodgeTable> hodge_table_for(const ManifoldSpec& spec);

}  // namespace chiy
