#include "genord/chartab.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace genord {

CharacterTable CharacterTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CharTableError("cannot open character table file: " + path);
  nlohmann::json data;
  try {
    in >> data;
  } catch (const nlohmann::json::exception& e) {
    throw CharTableError(path + ": " + e.what());
  }
  try {
    return from_json(data);
  } catch (const CharTableError& e) {
    throw CharTableError(path + ": " + e.what());
  }
}

CharacterTable CharacterTable::from_json(const nlohmann::json& data) {
  CharacterTable t;
  try {
    t.name_ = data.at("name").get<std::string>();
    t.order_ = BigInt(data.at("order").get<long long>());
    t.source_ = data.value("source", std::string());
    for (const auto& cls : data.at("classes")) {
      TableClass tc;
      tc.name = cls.value("name", std::string());
      tc.size = cls.at("size").get<std::uint64_t>();
      tc.element_order = cls.at("element_order").get<long long>();
      t.classes_.push_back(std::move(tc));
    }
    if (data.contains("inverse_map"))
      t.stored_inverse_map_ = data.at("inverse_map").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw CharTableError(std::string("malformed table file: ") + e.what());
  }
  const int m = static_cast<int>(t.classes_.size());
  if (m == 0) throw CharTableError("table has no classes");
  const auto& rows = data.at("irreducibles");
  if (static_cast<int>(rows.size()) != m)
    throw CharTableError("irreducibles must have exactly " + std::to_string(m) + " rows");
  for (int r = 0; r < m; ++r) {
    if (static_cast<int>(rows[r].size()) != m)
      throw CharTableError("irreducibles row " + std::to_string(r) + " has wrong length");
    std::vector<Cyclotomic> row;
    for (int c = 0; c < m; ++c) {
      std::string text = rows[r][c].get<std::string>();
      try {
        row.push_back(Cyclotomic::parse(text));
      } catch (const CycloParseError& e) {
        throw CharTableError("row " + std::to_string(r) + ", column " + std::to_string(c) +
                             ": " + e.what());
      }
    }
    t.irreducibles_.push_back(std::move(row));
  }
  if (t.stored_inverse_map_ && static_cast<int>(t.stored_inverse_map_->size()) != m)
    throw CharTableError("inverse_map has wrong length");
  return t;
}

CharacterTable::Validation CharacterTable::validate() const {
  Validation v;
  auto fail = [&](std::string msg) {
    v.ok = false;
    v.failures.push_back(std::move(msg));
  };
  const int m = num_classes();

  BigInt size_sum = 0;
  for (const auto& c : classes_) size_sum += BigInt(c.size);
  if (size_sum != order_)
    fail("class sizes sum to " + size_sum.str() + ", expected " + order_.str());

  for (int i = 0; i < m; ++i)
    if (!(value(0, i) == Cyclotomic(1))) {
      fail("row 0 is not the trivial character at column " + std::to_string(i));
      break;
    }

  BigInt degree_square_sum = 0;
  for (int r = 0; r < m; ++r) {
    auto deg = value(r, 0).as_integer();
    if (!deg || *deg <= 0) {
      fail("degree of character " + std::to_string(r) + " is not a positive integer");
      continue;
    }
    degree_square_sum += (*deg) * (*deg);
  }
  if (degree_square_sum != order_)
    fail("sum of squared degrees is " + degree_square_sum.str() + ", expected " +
         order_.str());

  for (int r = 0; r < m; ++r) {
    for (int s = r; s < m; ++s) {
      Cyclotomic acc(0);
      for (int i = 0; i < m; ++i)
        acc = acc + Rational(BigInt(classes_[i].size)) *
                        (value(r, i) * value(s, i).conjugated());
      Cyclotomic expected(r == s ? Rational(order_) : Rational(0));
      if (!(acc == expected))
        fail("row orthogonality fails for characters " + std::to_string(r) + ", " +
             std::to_string(s));
    }
  }

  for (int i = 0; i < m; ++i) {
    if (order_ % BigInt(classes_[i].size) != 0) {
      fail("class size " + std::to_string(i) + " does not divide the group order");
      continue;
    }
    for (int j = i; j < m; ++j) {
      Cyclotomic acc(0);
      for (int r = 0; r < m; ++r) acc = acc + value(r, i) * value(r, j).conjugated();
      Cyclotomic expected(i == j ? Rational(order_, BigInt(classes_[i].size)) : Rational(0));
      if (!(acc == expected))
        fail("column orthogonality fails for classes " + std::to_string(i) + ", " +
             std::to_string(j));
    }
  }

  if (stored_inverse_map_) {
    const auto& inv = *stored_inverse_map_;
    for (int i = 0; i < m; ++i) {
      if (inv[i] < 0 || inv[i] >= m || inv[inv[i]] != i) {
        fail("inverse_map is not an involution at " + std::to_string(i));
        continue;
      }
      for (int r = 0; r < m; ++r)
        if (!(value(r, inv[i]) == value(r, i).conjugated())) {
          fail("inverse_map disagrees with conjugated columns at class " + std::to_string(i));
          break;
        }
    }
  }
  validated_ = v.ok;
  return v;
}

bool CharacterTable::class_real(int i) const {
  for (int r = 0; r < num_classes(); ++r)
    if (!(value(r, i).conjugated() == value(r, i))) return false;
  return true;
}

RealCensus CharacterTable::real_census() const {
  RealCensus census;
  int non_real = 0;
  for (int i = 1; i < num_classes(); ++i) {
    if (class_real(i))
      ++census.lambda;
    else
      ++non_real;
  }
  census.mu = non_real / 2;
  return census;
}

std::vector<int> CharacterTable::inverse_map() const {
  if (stored_inverse_map_) return *stored_inverse_map_;
  const int m = num_classes();
  std::vector<int> inv(m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      bool match = true;
      for (int r = 0; r < m && match; ++r)
        match = value(r, j) == value(r, i).conjugated();
      if (match) {
        inv[i] = j;
        break;
      }
    }
    if (inv[i] < 0)
      throw CharTableError("no conjugate column for class " + std::to_string(i));
  }
  return inv;
}

void CharacterTable::ensure_validated() const {
  if (!validated_) validated_ = validate().ok;
  if (!*validated_)
    throw CharTableError("table " + name_ + " failed validation; refusing alpha evaluation");
}

BigInt CharacterTable::alpha(int cls, int k) const {
  if (cls < 0 || cls >= num_classes()) throw std::out_of_range("class index out of range");
  if (k < 1) throw std::invalid_argument("alpha_{C,k} requires k >= 1");
  ensure_validated();
  Cyclotomic sum(0);
  for (int r = 0; r < num_classes(); ++r) {
    BigInt degree = *value(r, 0).as_integer();
    // chi(g)^k / chi(1)^(k-2); at k = 1 the negative exponent multiplies.
    Rational scale = k >= 2 ? Rational(BigInt(1), boost::multiprecision::pow(degree, k - 2))
                            : Rational(degree);
    sum = sum + scale * value(r, cls).pow(static_cast<unsigned long long>(k));
  }
  BigInt class_size_pow = boost::multiprecision::pow(BigInt(classes_[cls].size), k);
  Cyclotomic result = Rational(class_size_pow, order_) * sum;
  auto as_int = result.as_integer();
  if (!as_int)
    throw CharTableError("inconsistent table: alpha for class " + std::to_string(cls) +
                         ", k=" + std::to_string(k) + " is not a rational integer (" +
                         result.str() + ")");
  if (*as_int < 0)
    throw CharTableError("inconsistent table: alpha for class " + std::to_string(cls) +
                         ", k=" + std::to_string(k) + " is negative (" + as_int->str() + ")");
  return *as_int;
}

AlphaProfile CharacterTable::generalized_order(int cls, int k_cap) const {
  if (k_cap <= 0) k_cap = 2 * real_census().mu + 2;
  AlphaProfile profile;
  profile.class_index = cls;
  profile.k_cap = k_cap;
  for (int k = 1; k <= k_cap; ++k) {
    profile.alphas.push_back(alpha(cls, k));
    if (!profile.generalized_order && profile.alphas.back() > 0)
      profile.generalized_order = k;
  }
  return profile;
}

int CharacterTable::generalized_exponent() const {
  int result = 1;
  for (int c = 0; c < num_classes(); ++c) {
    AlphaProfile p = generalized_order(c);
    if (!p.generalized_order)
      throw CharTableError("generalized order not found within 2*mu + 2");
    result = std::max(result, *p.generalized_order);
  }
  return result;
}

CrossCheck cross_check_alpha(const ClassTable& group_table, const CharacterTable& char_table,
                             int k_max) {
  CrossCheck check;
  check.k_max = k_max;
  auto fail = [&](std::string msg) {
    check.ok = false;
    check.failures.push_back(std::move(msg));
  };
  if (BigInt(group_table.group().order()) != char_table.order()) {
    fail("group order " + group_table.group().order().str() + " != table order " +
         char_table.order().str());
    return check;
  }
  if (group_table.num_classes() != char_table.num_classes()) {
    fail("class counts differ");
    return check;
  }

  using Key = std::tuple<long long, std::uint64_t, bool>;
  std::map<Key, CrossCheck::Bucket> buckets;
  for (int i = 0; i < group_table.num_classes(); ++i) {
    const auto& c = group_table.cls(i);
    auto& b = buckets[{c.element_order, c.size, c.real}];
    b.element_order = c.element_order;
    b.size = c.size;
    b.real = c.real;
    b.group_classes.push_back(i);
  }
  for (int i = 0; i < char_table.num_classes(); ++i) {
    const auto& c = char_table.classes()[i];
    auto& b = buckets[{c.element_order, c.size, char_table.class_real(i)}];
    b.element_order = c.element_order;
    b.size = c.size;
    b.real = char_table.class_real(i);
    b.table_classes.push_back(i);
  }

  for (auto& [key, bucket] : buckets) {
    if (bucket.group_classes.size() != bucket.table_classes.size()) {
      fail("fingerprint (order " + std::to_string(bucket.element_order) + ", size " +
           std::to_string(bucket.size) + ", real " + (bucket.real ? "yes" : "no") +
           ") has unequal class counts");
      bucket.match = false;
      check.buckets.push_back(bucket);
      continue;
    }
    std::vector<std::vector<BigInt>> group_profiles, table_profiles;
    for (int gc : bucket.group_classes) {
      ClassConvolution conv(group_table, gc);
      std::vector<BigInt> profile;
      for (int k = 1; k <= k_max; ++k) profile.push_back(conv.alpha(k));
      group_profiles.push_back(std::move(profile));
    }
    for (int tc : bucket.table_classes) {
      std::vector<BigInt> profile;
      for (int k = 1; k <= k_max; ++k) profile.push_back(char_table.alpha(tc, k));
      table_profiles.push_back(std::move(profile));
    }
    std::sort(group_profiles.begin(), group_profiles.end());
    std::sort(table_profiles.begin(), table_profiles.end());
    bucket.match = group_profiles == table_profiles;
    if (!bucket.match)
      fail("alpha profiles disagree within fingerprint (order " +
           std::to_string(bucket.element_order) + ", size " + std::to_string(bucket.size) + ")");
    check.buckets.push_back(bucket);
  }
  return check;
}

}  // namespace genord
