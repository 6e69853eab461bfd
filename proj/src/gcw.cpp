#include "rosi/gcw.hpp"

#include <json.hpp>

#include "rosi/error.hpp"

namespace rosi {

using nlohmann::json;

OCChainComplex complex_from_gcw_json(const Group& g, const std::string& jsonText) {
  json doc;
  try {
    doc = json::parse(jsonText);
  } catch (const std::exception& e) {
    throw Error(Err::ParseError, std::string("bad complex JSON: ") + e.what());
  }
  if (!doc.contains("cells") || !doc["cells"].is_array())
    throw Error(Err::ParseError, "complex JSON needs a \"cells\" array");

  const auto& lat = g.lattice();

  struct CellIn {
    int stabClass;
    json boundary;
  };
  std::vector<std::vector<CellIn>> cells;
  std::vector<int> stabClasses;
  for (const auto& level : doc["cells"]) {
    std::vector<CellIn> row;
    for (const auto& cell : level) {
      std::string label = cell.at("stabilizer").get<std::string>();
      int cls = lat.class_by_label(label);
      if (cls < 0)
        throw Error(Err::ParseError, "unknown stabilizer class label: " + label);
      stabClasses.push_back(cls);
      row.push_back(CellIn{cls, cell.value("boundary", json::array())});
    }
    cells.push_back(std::move(row));
  }

  Family fam = Family::down_closure(g, stabClasses);
  auto cat = std::make_shared<OrbitCategory>(g, fam);

  OCChainComplex c;
  c.cat = cat;
  c.augmented = true;
  c.modules.resize(cells.size());
  c.diffs.resize(cells.size());
  for (std::size_t n = 0; n < cells.size(); ++n)
    for (const auto& cell : cells[n])
      c.modules[n].types.push_back(cat->object_of_class(cell.stabClass));

  for (std::size_t n = 1; n < cells.size(); ++n) {
    c.diffs[n].entries.assign(c.modules[n - 1].rank(),
                              std::vector<FormalSum>(c.modules[n].rank()));
    for (std::size_t col = 0; col < cells[n].size(); ++col) {
      for (const auto& b : cells[n][col].boundary) {
        std::size_t target = b.at("cell").get<std::size_t>();
        long long coeff = b.at("coeff").get<long long>();
        std::string repStr = b.value("rep", "()");
        if (target >= c.modules[n - 1].rank())
          throw Error(Err::ParseError, "boundary target out of range");
        Perm rep = parse_cycles(repStr, g.degree());
        auto idx = g.index_of(rep);
        if (!idx)
          throw Error(Err::ParseError, "boundary rep is not a group element: " + repStr);
        int tObj = c.modules[n - 1].types[target];
        std::size_t coset = cat->coset_of_element(tObj, *idx);
        // must be a morphism from the cell's own stabilizer type
        int sObj = c.modules[n].types[col];
        const auto& mors = cat->morphisms(sObj, tObj);
        if (!std::binary_search(mors.begin(), mors.end(),
                                static_cast<std::uint32_t>(coset)))
          throw Error(Err::BoundaryNotSquareZero,
                      "boundary rep does not define an equivariant map");
        c.diffs[n].entries[target][col].add(static_cast<std::uint32_t>(coset), coeff);
      }
    }
  }
  validate_complex(c);
  return c;
}

std::string superclass_to_json(const Group& g, const SuperClassFunction& n) {
  const auto& lat = g.lattice();
  json arr = json::array();
  for (std::size_t c = 0; c < n.values.size(); ++c) {
    if (n.values[c] < 0) continue;
    json e;
    e["classLabel"] = lat.classes[c].label;
    e["order"] = lat.classes[c].order;
    e["value"] = n.values[c];
    arr.push_back(e);
  }
  return arr.dump(2);
}

SuperClassFunction superclass_from_json(const Group& g, const std::string& jsonText) {
  json doc;
  try {
    doc = json::parse(jsonText);
  } catch (const std::exception& e) {
    throw Error(Err::ParseError, std::string("bad dimension function JSON: ") + e.what());
  }
  const auto& lat = g.lattice();
  SuperClassFunction n;
  n.values.assign(lat.classes.size(), -1);
  for (const auto& e : doc) {
    std::string label = e.at("classLabel").get<std::string>();
    int cls = lat.class_by_label(label);
    if (cls < 0)
      throw Error(Err::ParseError, "unknown class label: " + label);
    if (e.contains("order") &&
        e.at("order").get<std::uint64_t>() != lat.classes[cls].order)
      throw Error(Err::ParseError, "order mismatch for class " + label);
    n.values[cls] = e.at("value").get<long long>();
  }
  return n;
}

} // namespace rosi
