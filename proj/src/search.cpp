#include "matroidlab/search.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "matroidlab/bc_complex.hpp"
#include "matroidlab/error.hpp"

namespace matroidlab {

namespace {

std::uint64_t factorial(std::size_t k) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) {
    if (f > UINT64_MAX / i) throw Error(Errc::Overbudget, std::to_string(k) + "! does not fit in 64 bits");
    f *= i;
  }
  return f;
}

// lexicographic unranking of a permutation of `items`
std::vector<std::size_t> unrank(std::vector<std::size_t> items, std::uint64_t rank) {
  std::vector<std::size_t> out;
  while (!items.empty()) {
    std::uint64_t f = factorial(items.size() - 1);
    std::size_t k = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(items[k]);
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return out;
}

}  // namespace

std::uint64_t standard_ordering_count(const Matroid& m) {
  std::uint64_t b = m.bases().size();
  std::uint64_t a = factorial(m.rank()), c = factorial(m.size() - m.rank());
  if (b && (a > UINT64_MAX / b || a * b > UINT64_MAX / c))
    throw Error(Errc::Overbudget, "standard ordering count does not fit in 64 bits");
  return b * a * c;
}

StandardOrdering standard_ordering_at(const Matroid& m, std::uint64_t index) {
  const std::size_t n = m.size(), r = m.rank();
  if (index >= standard_ordering_count(m)) throw Error(Errc::BadParams, "ordering index out of range");
  const std::uint64_t rf = factorial(r), cf = factorial(n - r);
  std::uint64_t cobasis_rank = index % cf;
  index /= cf;
  std::uint64_t basis_rank = index % rf;
  ElementSet b = m.bases()[index / rf];
  auto order = unrank((m.ground_set() - b).elements(), cobasis_rank);
  auto tail = unrank(b.elements(), basis_rank);
  order.insert(order.end(), tail.begin(), tail.end());
  return StandardOrdering{Ordering(std::move(order)), b};
}

void for_each_standard_ordering(const Matroid& m, std::uint64_t from, std::uint64_t to,
                                const std::function<bool(std::uint64_t, const StandardOrdering&)>& fn) {
  to = std::min(to, standard_ordering_count(m));
  for (std::uint64_t i = from; i < to; ++i)
    if (!fn(i, standard_ordering_at(m, i))) return;
}

std::string matroid_hash(const Matroid& m) {
  std::uint64_t h = 1469598103934665603ull;
  auto eat = [&](std::uint64_t x, int bytes) {
    for (int i = 0; i < bytes; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (const auto& l : m.labels()) {
    for (unsigned char c : l) eat(c, 1);
    eat(0, 1);
  }
  eat(m.rank(), 8);
  for (ElementSet b : m.bases()) eat(b.bits(), 8);
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

SearchPolicy SearchPolicy::parse(const std::string& text) {
  SearchPolicy p;
  if (text == "exhaustive") return p;
  if (text == "first-hit") {
    p.kind = Kind::FirstHit;
    return p;
  }
  if (text.rfind("sample:", 0) == 0) {
    auto colon = text.find(':', 7);
    try {
      std::size_t used = 0;
      std::string count = text.substr(7, colon == std::string::npos ? std::string::npos : colon - 7);
      p.count = std::stoull(count, &used);
      if (used != count.size()) throw std::invalid_argument("count");
      if (colon != std::string::npos) {
        std::string seed = text.substr(colon + 1);
        p.seed = std::stoull(seed, &used);
        if (used != seed.size()) throw std::invalid_argument("seed");
      }
    } catch (const std::logic_error&) {
      throw Error(Errc::Parse, "bad sample policy '" + text + "'");
    }
    p.kind = Kind::Sample;
    return p;
  }
  throw Error(Errc::Parse, "unknown policy '" + text + "'");
}

std::string SearchPolicy::to_string() const {
  switch (kind) {
    case Kind::Exhaustive:
      return "exhaustive";
    case Kind::FirstHit:
      return "first-hit";
    case Kind::Sample:
      break;
  }
  return "sample:" + std::to_string(count) + ":" + std::to_string(seed);
}

Shard Shard::parse(const std::string& text) {
  auto slash = text.find('/');
  Shard s;
  try {
    if (slash == std::string::npos) throw std::invalid_argument("slash");
    s.index = std::stoul(text.substr(0, slash));
    s.count = std::stoul(text.substr(slash + 1));
  } catch (const std::logic_error&) {
    throw Error(Errc::Parse, "shard must look like i/m, got '" + text + "'");
  }
  if (s.count == 0 || s.index >= s.count) throw Error(Errc::Parse, "shard index out of range in '" + text + "'");
  return s;
}

std::string Shard::to_string() const { return std::to_string(index) + "/" + std::to_string(count); }

// ---------------------------------------------------------------------------

struct FastNbcKernel::Shared {
  static constexpr std::size_t kMaxVars = 16;
  using Exps = std::array<std::uint8_t, kMaxVars>;

  Matroid m;
  FieldTag field;
  std::size_t n = 0, r = 0, v = 0;
  bool generic = false;  // disconnected or too many variables
  std::int64_t h_sum = 0;
  std::vector<ElementSet> circuits;
  std::unordered_map<std::uint64_t, std::size_t> basis_index;
  std::vector<std::vector<ElementSet>> cocircuits;  // [basis][element], empty off the basis

  Shared(const Matroid& mm, FieldTag f) : m(mm), field(f) {
    n = m.size();
    r = m.rank();
    v = n - r;
    generic = v > kMaxVars || !m.is_connected();
    h_sum = f_h_vectors(m, Ordering::natural(n)).h_sum();
    if (generic) return;
    circuits = m.circuits();
    const auto& bases = m.bases();
    cocircuits.resize(bases.size());
    for (std::size_t i = 0; i < bases.size(); ++i) {
      basis_index.emplace(bases[i].bits(), i);
      cocircuits[i].resize(n);
      bases[i].for_each([&](std::size_t e) { cocircuits[i][e] = m.fundamental_cocircuit(bases[i], e); });
    }
  }
};

FastNbcKernel::FastNbcKernel(const Matroid& m, FieldTag field) : shared_(std::make_shared<Shared>(m, field)) {}
FastNbcKernel::FastNbcKernel(std::shared_ptr<const Shared> shared) : shared_(std::move(shared)) {}

std::optional<std::size_t> FastNbcKernel::lower_size_bounded(const StandardOrdering& so) const {
  const Shared& s = *shared_;
  using Exps = Shared::Exps;
  if (s.generic) {
    NbcOptions opt{BasisPath::Macaulay, false};
    NbcReport rep = nbc_check(s.m, so, s.field, opt);
    if (rep.infinite_lower || static_cast<std::int64_t>(rep.lower_size) > s.h_sum) return std::nullopt;
    return rep.lower_size;
  }
  const Ordering& ord = so.ordering;
  const std::size_t v = s.v;
  const auto& cocs = s.cocircuits[s.basis_index.at(so.basis.bits())];
  std::vector<std::size_t> var(s.n);  // d_j - 1 per element
  for (std::size_t p = 0; p < s.n; ++p) {
    std::size_t e = ord.element_at(p);
    var[e] = p < v ? p : ord.position_of(ord.least(cocs[e]));
  }
  std::vector<Exps> gens;
  gens.reserve(s.circuits.size());
  for (ElementSet c : s.circuits) {
    std::size_t least = ord.least(c);
    Exps x{};
    if ((c - so.basis).size() == 1) {
      x[ord.position_of(least)] = static_cast<std::uint8_t>(c.size() - 1);
    } else {
      c.without(least).for_each([&](std::size_t e) { ++x[var[e]]; });
    }
    gens.push_back(x);
  }
  auto divides = [v](const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < v; ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  std::sort(gens.begin(), gens.end(), [](const Exps& a, const Exps& b) {
    unsigned da = 0, db = 0;
    for (auto x : a) da += x;
    for (auto x : b) db += x;
    return da != db ? da < db : a < b;
  });
  std::vector<Exps> minimal;
  for (const auto& g : gens)
    if (std::none_of(minimal.begin(), minimal.end(), [&](const Exps& h) { return divides(h, g); }))
      minimal.push_back(g);
  for (std::size_t i = 0; i < v; ++i) {
    bool pure = std::any_of(minimal.begin(), minimal.end(), [&](const Exps& g) {
      for (std::size_t w = 0; w < v; ++w)
        if (w != i && g[w]) return false;
      return true;
    });
    if (!pure) return std::nullopt;
  }
  auto in_upper = [&](const Exps& x) {
    return std::any_of(minimal.begin(), minimal.end(), [&](const Exps& g) { return divides(g, x); });
  };
  const std::size_t limit = static_cast<std::size_t>(s.h_sum);
  std::size_t count = 0;
  bool over = false;
  Exps cur{};
  // variables are fixed from the first; later ones are zero while probing
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (over) return;
    if (i == v) {
      if (++count > limit) over = true;
      return;
    }
    for (std::uint8_t e = 0;; ++e) {
      cur[i] = e;
      if (in_upper(cur)) break;
      self(self, i + 1);
      if (over) break;
    }
    cur[i] = 0;
  };
  if (!in_upper(cur)) rec(rec, 0);
  if (over) return std::nullopt;
  return count;
}

bool FastNbcKernel::is_basis(const StandardOrdering& so) const {
  const Shared& s = *shared_;
  NbcOptions opt{BasisPath::Macaulay, false};
  if (!s.generic) {
    auto count = lower_size_bounded(so);
    if (!count || static_cast<std::int64_t>(*count) != s.h_sum) return false;
  }
  return nbc_check(s.m, so, s.field, opt).basis;
}

// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

struct State {
  std::uint64_t next = 0;  // position in this shard's index list
  std::uint64_t basis = 0, not_basis = 0;
  std::optional<std::uint64_t> witness_index;
  bool done = false;
};

json state_json(const std::string& hash, const SearchPolicy& policy, const SearchOptions& opt, const State& st,
                const Matroid& m) {
  json j;
  j["matroid_hash"] = hash;
  j["policy"] = policy.to_string();
  j["field"] = opt.field.name();
  j["shard"] = opt.shard.to_string();
  j["next_index"] = st.next;
  j["tallies"] = {{"basis", st.basis}, {"not_basis", st.not_basis}};
  j["complete"] = st.done;
  if (st.witness_index) {
    j["first_witness_index"] = *st.witness_index;
    j["first_witness"] = standard_ordering_at(m, *st.witness_index).ordering.labels(m);
  } else {
    j["first_witness_index"] = nullptr;
    j["first_witness"] = nullptr;
  }
  return j;
}

void save_state(const std::string& path, const json& j) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error(Errc::BadParams, "cannot write " + tmp);
    out << j.dump(2) << "\n";
  }
  std::rename(tmp.c_str(), path.c_str());
}

std::optional<State> load_state(const std::string& path, const std::string& hash, const SearchPolicy& policy,
                                const SearchOptions& opt) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, "resume file " + path + ": " + e.what());
  }
  auto expect = [&](const char* key, const std::string& want) {
    if (j.value(key, std::string()) != want)
      throw Error(Errc::BadParams, std::string("resume file was written for a different ") + key);
  };
  expect("matroid_hash", hash);
  expect("policy", policy.to_string());
  expect("field", opt.field.name());
  expect("shard", opt.shard.to_string());
  State st;
  st.next = j.at("next_index").get<std::uint64_t>();
  st.basis = j.at("tallies").at("basis").get<std::uint64_t>();
  st.not_basis = j.at("tallies").at("not_basis").get<std::uint64_t>();
  if (j.contains("first_witness_index") && !j["first_witness_index"].is_null())
    st.witness_index = j["first_witness_index"].get<std::uint64_t>();
  st.done = j.value("complete", false);
  return st;
}

std::vector<std::uint64_t> sample_indices(std::uint64_t total, std::uint64_t count, std::uint64_t seed) {
  std::vector<std::uint64_t> out;
  if (count >= total) {
    out.resize(total);
    for (std::uint64_t i = 0; i < total; ++i) out[i] = i;
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
  std::set<std::uint64_t> chosen;
  while (chosen.size() < count) chosen.insert(pick(rng));
  return {chosen.begin(), chosen.end()};
}

}  // namespace

SearchReport search_orderings(const Matroid& m, const SearchPolicy& policy, const SearchOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.policy = policy.to_string();
  rep.field = opt.field.name();
  rep.shard = opt.shard.to_string();
  rep.total_orderings = standard_ordering_count(m);

  std::vector<std::uint64_t> sampled;
  std::uint64_t list_size = rep.total_orderings;
  if (policy.kind == SearchPolicy::Kind::Sample) {
    sampled = sample_indices(rep.total_orderings, policy.count, policy.seed);
    list_size = sampled.size();
  }
  auto index_at = [&](std::uint64_t pos) { return sampled.empty() ? pos : sampled[pos]; };
  const unsigned __int128 big = list_size;
  const std::uint64_t lo = static_cast<std::uint64_t>(big * opt.shard.index / opt.shard.count);
  const std::uint64_t hi = static_cast<std::uint64_t>(big * (opt.shard.index + 1) / opt.shard.count);
  rep.planned = hi - lo;

  const std::string hash = opt.resume_path ? matroid_hash(m) : std::string();
  State st;
  st.next = lo;
  if (opt.resume_path)
    if (auto loaded = load_state(*opt.resume_path, hash, policy, opt)) st = *loaded;

  FastNbcKernel proto(m, opt.field);
  const std::size_t workers = std::max<std::size_t>(1, opt.workers);
  const std::size_t window = std::max<std::size_t>(1, opt.window);

  auto evaluate = [&](const FastNbcKernel& kernel, std::uint64_t pos) {
    StandardOrdering so = standard_ordering_at(m, index_at(pos));
    if (opt.fast) return kernel.is_basis(so);
    return nbc_check(m, so, opt.field, NbcOptions{BasisPath::Groebner, false}).basis;
  };

  std::size_t windows = 0;
  while (!st.done && st.next < hi) {
    if (opt.max_windows && windows++ == opt.max_windows) break;
    const std::uint64_t start = st.next;
    const std::uint64_t end = std::min<std::uint64_t>(hi, start + window);
    std::vector<std::uint8_t> hit(end - start, 0);
    const std::size_t nthreads = std::min<std::size_t>(workers, end - start);
    if (nthreads <= 1) {
      for (std::uint64_t p = start; p < end; ++p) hit[p - start] = evaluate(proto, p);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(nthreads);
      const std::uint64_t len = end - start;
      for (std::size_t w = 0; w < nthreads; ++w) {
        pool.emplace_back([&, w] {
          try {
            FastNbcKernel kernel(proto.shared());
            std::uint64_t a = start + len * w / nthreads, b = start + len * (w + 1) / nthreads;
            for (std::uint64_t p = a; p < b; ++p) hit[p - start] = evaluate(kernel, p);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (std::uint64_t p = start; p < end; ++p) {
      st.next = p + 1;
      if (hit[p - start]) {
        ++st.basis;
        if (!st.witness_index) st.witness_index = index_at(p);
        if (policy.kind == SearchPolicy::Kind::FirstHit) {
          st.done = true;
          break;
        }
      } else {
        ++st.not_basis;
      }
    }
    if (st.next >= hi) st.done = true;
    if (opt.resume_path) save_state(*opt.resume_path, state_json(hash, policy, opt, st, m));
  }
  if (st.next >= hi) st.done = true;

  rep.basis = st.basis;
  rep.not_basis = st.not_basis;
  rep.examined = st.basis + st.not_basis;
  rep.complete = st.done;
  rep.first_witness_index = st.witness_index;
  if (st.witness_index) rep.first_witness = standard_ordering_at(m, *st.witness_index).ordering.labels(m);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace matroidlab
