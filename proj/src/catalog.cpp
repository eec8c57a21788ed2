#include <stdexcept>

#include "braidperm/braid_hom.hpp"

namespace braidperm {

namespace {

Permutation P(int n, const char* cycles) { return Permutation::parse(cycles, n); }

int param(const std::map<std::string, int>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw std::invalid_argument("missing parameter '" + key + "'");
  return it->second;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

BraidHom mu(int k) {
  std::vector<Permutation> imgs;
  for (int i = 1; i < k; ++i) imgs.push_back(Permutation::transposition(k, i, i + 1));
  return BraidHom(k, k, std::move(imgs));
}

struct AlphaBeta {
  const char* alpha;
  const char* beta;
  const char* sigma1;  // listed alongside, may be empty
};

const std::vector<AlphaBeta>& psi3_table(int n) {
  static const std::vector<AlphaBeta> n4{{"(1,2,3)", "(1,4)", ""}, {"(1,2,3)", "(1,2)(3,4)", ""}};
  static const std::vector<AlphaBeta> n5{{"(1,2,3)", "(1,4)(2,5)", ""}};
  static const std::vector<AlphaBeta> n6{
      {"(1,2,3)(4,5,6)", "(1,2)(3,4)(5,6)", "(2,3,6,4)"},
      {"(1,2,3)(4,5,6)", "(1,4)(2,6)(3,5)", "(1,6)(2,5)(3,4)"},
      {"(1,2,3)(4,5,6)", "(1,2)(3,4)", "(2,3,6,5,4)"},
      {"(1,2,3)(4,5,6)", "(1,4)(2,5)", "(1,6,5)(2,4,3)"},
      {"(1,2,3)(4,5,6)", "(1,2)", "(2,3)(4,6,5)"},
      {"(1,2,3)(4,5,6)", "(1,4)", "(1,6,5,4,3,2)"},
      {"(1,2,3)", "(1,4)(2,5)(3,6)", "(1,4,3,6,2,5)"},
  };
  static const std::vector<AlphaBeta> n7{
      {"(1,2,3)(4,5,6)", "(1,4)(2,7)", "(1,6,5,4,3,2,7)"},
      {"(1,2,3)(4,5,6)", "(1,2)(3,4)(5,7)", "(2,3,6,5,7,4)"},
      {"(1,2,3)(4,5,6)", "(1,4)(2,5)(3,7)", "(1,6,5)(2,4,3,7)"},
  };
  switch (n) {
    case 4: return n4;
    case 5: return n5;
    case 6: return n6;
    case 7: return n7;
    default: throw std::invalid_argument("psi3 is listed for n = 4..7");
  }
}

BraidHom from_table(int n, std::vector<const char*> cycles) {
  std::vector<Permutation> imgs;
  for (const char* c : cycles) imgs.push_back(P(n, c));
  const int k = static_cast<int>(imgs.size()) + 1;
  return BraidHom(k, n, std::move(imgs));
}

// Transpositions (2j-1,2j) for every block j outside {i, i+1}.
std::vector<std::vector<int>> idle_pairs(int k, int i) {
  std::vector<std::vector<int>> out;
  for (int j = 1; j <= k; ++j)
    if (j != i && j != i + 1) out.push_back({2 * j - 1, 2 * j});
  return out;
}

BraidHom model(int j, int k) {
  require(k >= 3, "model homomorphisms need k >= 3");
  std::vector<Permutation> imgs;
  for (int i = 1; i < k; ++i) {
    std::vector<std::vector<int>> cyc;
    if (j == 2 || j == 3) cyc = idle_pairs(k, i);
    if (j == 1 || j == 3)
      cyc.push_back({2 * i - 1, 2 * i + 2, 2 * i, 2 * i + 1});
    else if (j == 2) {
      cyc.push_back({2 * i - 1, 2 * i + 1});
      cyc.push_back({2 * i, 2 * i + 2});
    } else {
      throw std::invalid_argument("model index must be 1, 2 or 3");
    }
    imgs.push_back(Permutation::from_cycles(2 * k, cyc));
  }
  return BraidHom(k, 2 * k, std::move(imgs));
}

BraidHom doubled(int k, int n) {
  require(n >= 2 * k, "doubled needs n >= 2k");
  std::vector<Permutation> imgs;
  for (int i = 1; i < k; ++i) imgs.push_back(Permutation::from_cycles(n, {{2 * i - 1, 2 * i + 1}, {2 * i, 2 * i + 2}}));
  return BraidHom(k, n, std::move(imgs));
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"mu",      "nu6",   "nu4_1",   "nu4_2",      "nu4_3",    "constant",   "psi3",
          "psi4_5",  "psi4_6", "psi5_6", "kappa_mu6",  "model",    "mu_lift",    "psi56_lift",
          "nu6_lift", "fixed_pair", "doubled", "b4_extra", "b6_s10"};
}

int psi3_count(int n) { return static_cast<int>(psi3_table(n).size()); }

std::optional<Permutation> psi3_listed_sigma1(int n, int i) {
  const auto& t = psi3_table(n);
  require(i >= 1 && i <= static_cast<int>(t.size()), "psi3 index out of range");
  if (*t[i - 1].sigma1 == '\0') return std::nullopt;
  return P(n, t[i - 1].sigma1);
}

BraidHom named_hom(const std::string& name, const std::map<std::string, int>& params) {
  if (name == "mu") {
    int k = param(params, "k");
    require(k >= 2, "mu needs k >= 2");
    return mu(k);
  }
  if (name == "nu6") return BraidHom::from_sigma1_alpha(6, P(6, "(1,2)(3,4)(5,6)"), P(6, "(1,2,3)(4,5)"));
  if (name == "nu4_1") return BraidHom::from_sigma1_alpha(4, P(4, "(1,2,3,4)"), P(4, "(1,2)"));
  if (name == "nu4_2") return BraidHom::from_sigma1_alpha(4, P(4, "(1,3,2,4)"), P(4, "(1,2,3,4)"));
  if (name == "nu4_3") return BraidHom::from_sigma1_alpha(4, P(4, "(1,2,3)"), P(4, "(1,2)(3,4)"));
  if (name == "constant") {
    int k = param(params, "k"), n = param(params, "n");
    std::vector<int> c;
    for (int x = 1; x <= n; ++x) c.push_back(x);
    return BraidHom::constant(k, n == 1 ? Permutation::identity(1) : Permutation::from_cycles(n, {c}));
  }
  if (name == "psi3") {
    int n = param(params, "n"), i = param(params, "i");
    const auto& t = psi3_table(n);
    require(i >= 1 && i <= static_cast<int>(t.size()), "psi3 index out of range");
    return BraidHom::from_alpha_beta(3, P(n, t[i - 1].alpha), P(n, t[i - 1].beta));
  }
  if (name == "psi4_5") return BraidHom::from_alpha_beta(4, P(5, "(1,4)(2,5)"), P(5, "(3,5,4)"));
  if (name == "psi4_6") {
    switch (param(params, "i")) {
      case 1: return from_table(6, {"(1,2)(3,4)(5,6)", "(1,5)(2,3)(4,6)", "(1,3)(2,4)(5,6)"});
      case 2: return from_table(6, {"(1,2,4,3)", "(1,5,4,6)", "(3,4,2,1)"});
      case 3: return from_table(6, {"(1,2)(3,4)", "(2,5)(4,6)", "(1,4)(2,3)"});
      case 4: return from_table(6, {"(4,3,2,1)(5,6)", "(4,6,2,5)(1,3)", "(1,2,3,4)(5,6)"});
      default: throw std::invalid_argument("psi4_6 index must be 1..4");
    }
  }
  if (name == "psi5_6")
    return from_table(6, {"(1,2)(3,4)(5,6)", "(1,5)(2,3)(4,6)", "(1,3)(2,4)(5,6)", "(1,2)(3,5)(4,6)"});
  if (name == "kappa_mu6") return compose(mu(6), kappa);
  if (name == "model") return model(param(params, "j"), param(params, "k"));
  if (name == "mu_lift") {
    int n = param(params, "n"), j = param(params, "j");
    require(j >= 0 && j <= 3, "mu_lift index must be 0..3");
    return j == 0 ? doubled(n, 2 * n) : model(j, n);
  }
  if (name == "psi56_lift") {
    static const char* e0[] = {"(1,3)(2,4)(5,7)(6,8)(9,11)(10,12)", "(1,9)(2,10)(3,5)(4,6)(7,11)(8,12)",
                               "(1,5)(2,6)(3,7)(4,8)(9,11)(10,12)", "(1,3)(2,4)(5,9)(6,10)(7,11)(8,12)"};
    static const char* e1[] = {"(1,4,2,3)(5,8,6,7)(9,12,10,11)", "(1,10,2,9)(3,6,4,5)(7,11,8,12)",
                               "(1,6,2,5)(3,8,4,7)(9,11,10,12)", "(1,3,2,4)(5,10,6,9)(7,12,8,11)"};
    int j = param(params, "j");
    require(j >= 0 && j <= 3, "psi56_lift index must be 0..3");
    std::vector<const char*> c(j % 2 ? e1 : e0, (j % 2 ? e1 : e0) + 4);
    if (j == 2) c[2] = "(1,6)(2,5)(3,8)(4,7)(9,11)(10,12)";
    if (j == 3) c[2] = "(1,5,2,6)(3,7,4,8)(9,11,10,12)";
    return from_table(12, c);
  }
  if (name == "nu6_lift") {
    int y = param(params, "y");
    require(y == 0 || y == 1, "nu6_lift index must be 0 or 1");
    std::vector<const char*> c{"(1,3)(2,4)(5,7)(6,8)(9,11)(10,12)", "(1,9)(2,10)(3,5)(4,6)(7,11)(8,12)",
                               "(1,5)(2,6)(3,7)(4,8)(9,11)(10,12)", "(1,3)(2,4)(5,9)(6,10)(7,11)(8,12)",
                               "(1,7)(2,8)(3,5)(4,6)(9,11)(10,12)"};
    if (y == 1) c[2] = "(1,6)(2,5)(3,8)(4,7)(9,11)(10,12)";
    return from_table(12, c);
  }
  if (name == "fixed_pair") {
    int k = param(params, "k"), n = param(params, "n");
    require(k >= 3 && n >= k + 2, "fixed_pair needs k >= 3 and n >= k+2");
    std::vector<Permutation> imgs;
    for (int i = 1; i < k; ++i) imgs.push_back(Permutation::from_cycles(n, {{1, 2}, {i + 2, i + 3}}));
    return BraidHom(k, n, std::move(imgs));
  }
  if (name == "doubled") return doubled(param(params, "k"), param(params, "n"));
  if (name == "b4_extra") {
    int j = param(params, "j"), n = param(params, "n");
    switch (j) {
      case 3: require(n >= 5, "needs n >= 5"); return from_table(n, {"(1,2)(3,4)", "(1,2)(4,5)", "(1,2)(3,4)"});
      case 4: require(n >= 6, "needs n >= 6"); return from_table(n, {"(1,2)(3,4)", "(2,5)(4,6)", "(1,2)(3,4)"});
      case 5: require(n >= 6, "needs n >= 6"); return from_table(n, {"(1,2)(3,4)", "(2,5)(4,6)", "(1,4)(2,3)"});
      case 6: require(n >= 7, "needs n >= 7"); return from_table(n, {"(1,2)(3,4)", "(2,5)(4,6)", "(1,2)(6,7)"});
      default: throw std::invalid_argument("b4_extra index must be 3..6");
    }
  }
  if (name == "b6_s10")
    return from_table(10, {"(1,2)(3,4)(5,6)", "(1,7)(3,8)(5,9)", "(3,6)(4,5)(7,10)", "(1,3)(2,4)(7,8)",
                           "(3,5)(4,6)(8,9)"});
  throw std::invalid_argument("unknown homomorphism name '" + name + "'");
}

}  // namespace braidperm
