#include "tutte/fixtures.hpp"

#include <map>

#include "json.hpp"
#include "tutte/error.hpp"

namespace tutte {

namespace detail {
const std::map<std::string, std::string>& embedded_fixture_files();
}  // namespace detail

namespace {

const std::string& file_content(const std::string& name) {
  const auto& files = detail::embedded_fixture_files();
  auto it = files.find(name);
  if (it == files.end()) throw Error("missing fixture file " + name);
  return it->second;
}

FixtureSet load() {
  const auto manifest = nlohmann::json::parse(file_content("manifest.json"));
  FixtureSet set;
  for (const auto& entry : manifest.at("polynomials")) {
    set.polynomials.push_back({parse_chain(entry.at("family").get<std::string>()),
                               entry.at("n").get<unsigned>(),
                               entry.at("source").get<std::string>(),
                               BivarPoly::parse(file_content(entry.at("file")))});
  }
  const auto& trees = manifest.at("spanning_trees");
  for (Chain chain : {Chain::pyrene, Chain::triphenylene}) {
    TauFixture row{chain, trees.at("source").get<std::string>(), {}};
    const auto& values = trees.at(std::string(chain_name(chain)));
    if (values.size() != row.values.size()) throw Error("spanning tree row has wrong length");
    for (std::size_t i = 0; i < row.values.size(); ++i) {
      row.values[i] = BigInt(values[i].get<std::string>());
    }
    set.spanning_trees.push_back(std::move(row));
  }
  return set;
}

}  // namespace

const PolynomialFixture& FixtureSet::polynomial(Chain chain, unsigned n) const {
  for (const auto& f : polynomials) {
    if (f.chain == chain && f.n == n) return f;
  }
  throw Error("no fixture for " + std::string(chain_name(chain)) + " n=" + std::to_string(n));
}

const TauFixture& FixtureSet::tau(Chain chain) const {
  for (const auto& f : spanning_trees) {
    if (f.chain == chain) return f;
  }
  throw Error("no spanning tree fixture for " + std::string(chain_name(chain)));
}

const FixtureSet& appendix_fixtures() {
  static const FixtureSet set = load();
  return set;
}

}  // namespace tutte
