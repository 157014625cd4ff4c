#include "matroidlab/constructions.hpp"

#include <algorithm>

#include "matroidlab/error.hpp"

namespace matroidlab {

namespace {

std::string member(std::size_t i, std::size_t k) { return "a" + std::to_string(i + 1) + "_" + std::to_string(k + 1); }

void check_sizes(const std::vector<std::size_t>& sizes) {
  if (sizes.empty()) throw Error(Errc::BadParams, "at least one component is needed");
  for (std::size_t s : sizes)
    if (s < 2) throw Error(Errc::BadParams, "component size " + std::to_string(s) + " is below 2");
}

Matroid glue(const std::vector<Matroid>& ops, const std::vector<std::string>& basepoints) {
  Matroid m = ops[0];
  for (std::size_t i = 1; i < ops.size(); ++i)
    m = parallel_connection_represented(m, ops[i], basepoints.size() == 1 ? basepoints[0] : basepoints[i - 1]);
  return m;
}

// members of component i other than the basepoints, label order
std::vector<std::string> privates(const Matroid& op, const std::vector<std::string>& basepoints) {
  std::vector<std::string> out;
  for (const auto& l : op.labels())
    if (std::find(basepoints.begin(), basepoints.end(), l) == basepoints.end()) out.push_back(l);
  std::sort(out.begin(), out.end());
  return out;
}

LabelledMatroid finish(Matroid m, const std::vector<std::string>& order) {
  Ordering ord = Ordering::from_labels(m, order);
  StandardOrdering so = StandardOrdering::make(m, std::move(ord));
  return {std::move(m), std::move(so)};
}

}  // namespace

Matroid corank_one_uniform(const std::vector<std::string>& labels) {
  const std::size_t n = labels.size();
  if (n < 2) throw Error(Errc::BadParams, "U(n-1,n) needs n >= 2");
  Matrix a(n - 1, n, FieldTag::rationals());
  for (std::size_t i = 0; i + 1 < n; ++i) {
    a.set(i, i, 1);
    a.set(i, n - 1, 1);
  }
  a.set_col_labels(labels);
  return Matroid::from_matrix(std::move(a));
}

std::vector<Matroid> theta_operands(std::vector<std::size_t> sizes) {
  check_sizes(sizes);
  std::sort(sizes.begin(), sizes.end());
  std::vector<Matroid> ops;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    std::vector<std::string> labels{"p"};
    for (std::size_t k = 0; k + 1 < sizes[i]; ++k) labels.push_back(member(i, k));
    ops.push_back(corank_one_uniform(labels));
  }
  return ops;
}

LabelledMatroid theta_matroid(std::vector<std::size_t> sizes) {
  std::vector<Matroid> ops = theta_operands(sizes);
  const std::size_t t = ops.size();
  std::vector<std::string> head{"p"};
  std::vector<std::vector<std::string>> rest(t);
  for (std::size_t i = 0; i < t; ++i) {
    auto own = privates(ops[i], {"p"});
    head.push_back(own.front());
    rest[i].assign(own.begin() + 1, own.end());
  }
  // e_n, e_{n-1}, ... take M_1's leftovers first
  std::vector<std::string> tail;
  for (const auto& block : rest) tail.insert(tail.end(), block.begin(), block.end());
  std::reverse(tail.begin(), tail.end());
  head.insert(head.end(), tail.begin(), tail.end());
  return finish(glue(ops, {"p"}), head);
}

std::vector<std::string> phi_basepoints(std::size_t t) {
  std::vector<std::string> out;
  for (std::size_t i = 2; i <= t; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

std::vector<Matroid> phi_operands(const std::vector<std::size_t>& sizes) {
  check_sizes(sizes);
  const std::size_t t = sizes.size();
  std::vector<Matroid> ops;
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<std::string> labels;
    if (i > 0) labels.push_back("p" + std::to_string(i + 1));
    if (i + 1 < t) labels.push_back("p" + std::to_string(i + 2));
    if (labels.size() > sizes[i]) throw Error(Errc::BadParams, "component too small for two basepoints");
    for (std::size_t k = 0; labels.size() < sizes[i]; ++k) labels.push_back(member(i, k));
    ops.push_back(corank_one_uniform(labels));
  }
  return ops;
}

LabelledMatroid phi_matroid(const std::vector<std::size_t>& sizes) {
  std::vector<Matroid> ops = phi_operands(sizes);
  const std::size_t t = ops.size();
  const auto bps = phi_basepoints(t);
  std::vector<std::string> order;
  for (std::size_t i = 1; i + 1 <= t; ++i) order.push_back("p" + std::to_string(t + 1 - i));
  auto first = privates(ops[0], bps);
  order.push_back(first.front());
  for (std::size_t i = t; i-- > 0;) {
    auto own = privates(ops[i], bps);
    auto from = i == 0 ? own.begin() + 1 : own.begin();
    order.insert(order.end(), from, own.end());
  }
  return finish(glue(ops, bps), order);
}

namespace {

Matrix bit_rows(const std::vector<std::string>& rows) {
  Matrix a(rows.size(), rows.front().size(), FieldTag::gf2());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) a.set(i, j, rows[i][j] == '1' ? 1 : 0);
  return a;
}

}  // namespace

NamedMatroid named_matroid(const std::string& name) {
  if (name == "R10")
    return {Matroid::from_matrix(bit_rows({"1000011001", "0100011100", "0010001110", "0001000111", "0000110011"})),
            std::nullopt};
  if (name == "DualK33") {
    Matroid m = Matroid::from_matrix(bit_rows({"001010011", "000011101", "111000001", "010100101"}));
    return {m, Ordering::natural(m.size())};
  }
  if (name == "K33")
    return {Matroid::from_matrix(
                bit_rows({"111000000", "000111000", "000000111", "001001001", "010010010", "100100100"})),
            std::nullopt};
  if (name == "K4")
    return {Matroid::from_graph({{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}}),
            std::nullopt};
  if (name == "U24") return {Matroid::uniform(2, 4), std::nullopt};
  if (name == "Fano")
    return {Matroid::from_matrix(bit_rows({"1001101", "0101011", "0010111"})), std::nullopt};
  throw Error(Errc::UnknownName, "no fixture named " + name);
}

std::vector<std::string> named_matroids() { return {"R10", "DualK33", "K33", "K4", "U24", "Fano"}; }

}  // namespace matroidlab
