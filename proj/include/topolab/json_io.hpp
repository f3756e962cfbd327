#pragma once

#include <string>

#include <json.hpp>

#include "topolab/compactness.hpp"
#include "topolab/domains.hpp"
#include "topolab/function_space.hpp"
#include "topolab/maps.hpp"
#include "topolab/space.hpp"

namespace topolab {

using Json = nlohmann::ordered_json;

// {"points": n, "opens": [[i,...],...], "labels": [...]?}
Json space_to_json(const FiniteSpace& x);
FiniteSpace space_from_json(const Json& j);

Json set_to_json(const PointSet& s);
PointSet set_from_json(const Json& j);

// {"dom": space, "cod": space, "graph": [...]}
Json map_to_json(const ContinuousMap& f);
ContinuousMap map_from_json(const Json& j);

// {"space": space?, "members": [[...],...], "target": [...]}
Json cover_to_json(const DirectedCover& c);
DirectedCover cover_from_json(const Json& j, const FiniteSpace* space = nullptr);

// {"index": space, "target": space, "role": "opens"|"compacts", "assign": [[...],...]}
Json family_to_json(const IndexedFamily& f);
IndexedFamily family_from_json(const Json& j);

// {"elements": n, "leq": [[bool,...],...]}
Json poset_to_json(const FinitePoset& p);
FinitePoset poset_from_json(const Json& j);

// {"dom": space, "cod": space, "maps": [[...],...], "space": space}
Json function_space_to_json(const FunctionSpace& fs);

Json load_json_file(const std::string& path);

}  // namespace topolab
