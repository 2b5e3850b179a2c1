#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "didp/errors.hpp"
#include "didp/number.hpp"
#include "didp/set.hpp"

namespace didp {

enum class ValueType { Element, Integer, Continuous, Bool, Set };

inline const char* to_string(ValueType t) {
  switch (t) {
    case ValueType::Element: return "element";
    case ValueType::Integer: return "integer";
    case ValueType::Continuous: return "continuous";
    case ValueType::Bool: return "bool";
    case ValueType::Set: return "set";
  }
  return "?";
}

// Dense constant table indexed by a tuple of object indices.
struct Table {
  std::string name;
  ValueType type = ValueType::Integer;
  std::vector<std::string> arg_objects;  // object type name per argument position
  std::vector<std::size_t> dims;         // object count per argument position
  std::string set_object;                // universe of set-valued entries
  std::size_t set_capacity = 0;

  std::vector<std::int64_t> ints;  // element, integer and bool tables
  std::vector<double> reals;       // continuous tables
  std::vector<Set> sets;           // set tables

  std::size_t arity() const { return dims.size(); }

  std::size_t size() const {
    std::size_t n = 1;
    for (auto d : dims) n *= d;
    return n;
  }

  std::size_t offset(const std::int64_t* idx, std::size_t n) const {
    if (n != dims.size())
      throw EvalError("table " + name + " expects " + std::to_string(dims.size()) + " indices, got " +
                      std::to_string(n));
    std::size_t off = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (idx[k] < 0 || static_cast<std::size_t>(idx[k]) >= dims[k])
        throw EvalError("index " + std::to_string(idx[k]) + " out of range for argument " + std::to_string(k) +
                        " of table " + name);
      off = off * dims[k] + static_cast<std::size_t>(idx[k]);
    }
    return off;
  }
  std::size_t offset(const std::vector<std::int64_t>& idx) const { return offset(idx.data(), idx.size()); }

  Number number_at(std::size_t off) const {
    if (type == ValueType::Continuous) return Number(reals[off]);
    return Number(ints[off]);
  }
};

class TableRegistry {
 public:
  std::size_t add(Table t) {
    if (by_name_.count(t.name)) throw ModelError("duplicate table name: " + t.name);
    std::size_t expected = t.size();
    std::size_t got = t.type == ValueType::Set ? t.sets.size()
                      : t.type == ValueType::Continuous ? t.reals.size()
                                                        : t.ints.size();
    if (got != expected)
      throw ModelError("table " + t.name + " has " + std::to_string(got) + " values, expected " +
                       std::to_string(expected));
    for (auto v : t.reals)
      if (std::isnan(v)) throw ModelError("table " + t.name + " contains NaN");
    if (t.type == ValueType::Element)
      for (auto v : t.ints)
        if (v < 0) throw ModelError("element table " + t.name + " contains a negative value");
    by_name_[t.name] = tables_.size();
    tables_.push_back(std::move(t));
    return tables_.size() - 1;
  }

  std::optional<std::size_t> find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }
  const Table& get(std::size_t id) const {
    if (id >= tables_.size()) throw EvalError("unknown table id " + std::to_string(id));
    return tables_[id];
  }
  const Table& get(const std::string& name) const {
    auto id = find(name);
    if (!id) throw EvalError("unknown table " + name);
    return tables_[*id];
  }
  std::size_t size() const { return tables_.size(); }
  const std::vector<Table>& all() const { return tables_; }

 private:
  std::vector<Table> tables_;
  std::unordered_map<std::string, std::size_t> by_name_;
};

// Convenience constructors used by the programmatic model builders.
inline Table make_table(std::string name, ValueType type, std::vector<std::string> arg_objects,
                        std::vector<std::size_t> dims) {
  Table t;
  t.name = std::move(name);
  t.type = type;
  t.arg_objects = std::move(arg_objects);
  t.dims = std::move(dims);
  std::size_t n = t.size();
  if (type == ValueType::Continuous)
    t.reals.assign(n, 0.0);
  else if (type != ValueType::Set)
    t.ints.assign(n, 0);
  return t;
}

inline Table make_set_table(std::string name, std::vector<std::string> arg_objects, std::vector<std::size_t> dims,
                            std::string set_object, std::size_t set_capacity) {
  Table t = make_table(std::move(name), ValueType::Set, std::move(arg_objects), std::move(dims));
  t.set_object = std::move(set_object);
  t.set_capacity = set_capacity;
  t.sets.assign(t.size(), Set(set_capacity));
  return t;
}

}  // namespace didp
