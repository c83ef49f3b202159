#include "tancone/examples.hpp"

namespace tancone::examples {

const std::string& sixbar() {
    static const std::string doc = R"JSON({
  "bodies": ["G", "L1", "L2", "L3", "L4", "L5"],
  "root": "G",
  "joints": [
    {"id": "J1", "kind": "revolute", "from": "G", "to": "L1",
     "screws": ["1", "0", "0", "0", "0", "0"]},
    {"id": "J2", "kind": "prismatic", "from": "L1", "to": "L2",
     "screws": ["0", "0", "0", "1", "0", "0"]},
    {"id": "J3", "kind": "spherical", "from": "L2", "to": "L3",
     "screws": ["1", "0", "0", "0", "0", "-1",
                "0", "1", "0", "0", "0", "-1",
                "0", "0", "1", "1", "1", "0"]},
    {"id": "J4", "kind": "cylindrical", "from": "L3", "to": "L4",
     "screws": ["1", "0", "0", "0", "0", "0",
                "0", "0", "0", "1", "0", "0"]},
    {"id": "J5", "kind": "cylindrical", "from": "L4", "to": "G",
     "screws": ["0", "1", "0", "0", "0", "0",
                "0", "0", "0", "0", "1", "0"]},
    {"id": "J6", "kind": "cylindrical", "from": "L3", "to": "L5",
     "screws": ["0", "1", "0", "0", "0", "0",
                "0", "0", "0", "0", "1", "0"]},
    {"id": "J7", "kind": "cylindrical", "from": "L5", "to": "G",
     "screws": ["1", "0", "0", "0", "0", "0",
                "0", "0", "0", "1", "0", "0"]}
  ],
  "tree": ["J2", "J3", "J4", "J5", "J7"]
}
)JSON";
    return doc;
}

const std::string& sevenR() {
    static const std::string doc = R"JSON({
  "bodies": ["B0", "B1", "B2", "B3", "B4", "B5", "B6"],
  "root": "B0",
  "joints": [
    {"id": "J1", "kind": "revolute", "from": "B0", "to": "B1",
     "screws": ["3/5", "4/5", "0", "0", "0", "-6/5"]},
    {"id": "J2", "kind": "revolute", "from": "B1", "to": "B2",
     "screws": ["0", "3/5", "4/5", "16/5", "0", "0"]},
    {"id": "J3", "kind": "revolute", "from": "B2", "to": "B3",
     "screws": ["-3/5", "4/5", "0", "0", "0", "6/5"]},
    {"id": "J4", "kind": "revolute", "from": "B3", "to": "B4",
     "screws": ["0", "0", "1", "0", "0", "0"]},
    {"id": "J5", "kind": "revolute", "from": "B4", "to": "B5",
     "screws": ["-4/5", "-3/5", "0", "0", "0", "-8/5"]},
    {"id": "J6", "kind": "revolute", "from": "B5", "to": "B6",
     "screws": ["0", "-3/5", "4/5", "-16/5", "0", "0"]},
    {"id": "J7", "kind": "revolute", "from": "B6", "to": "B0",
     "screws": ["4/5", "-3/5", "0", "0", "0", "8/5"]}
  ],
  "tree": ["J2", "J3", "J4", "J5", "J6", "J7"]
}
)JSON";
    return doc;
}

const std::string& fourbar() {
    static const std::string doc = R"JSON({
  "bodies": ["G", "L1", "L2", "L3"],
  "root": "G",
  "joints": [
    {"id": "A", "kind": "revolute", "from": "G", "to": "L1",
     "screws": ["0", "0", "1", "0", "0", "0"],
     "screws_at_q0": ["0", "0", "1", "0", "0", "0"]},
    {"id": "B", "kind": "revolute", "from": "L1", "to": "L2",
     "screws": ["0", "0", "1", "0", "-1", "0"],
     "screws_at_q0": ["0", "0", "1", "0", "-1", "0"]},
    {"id": "C", "kind": "revolute", "from": "L2", "to": "L3",
     "screws": ["0", "0", "1", "1", "-1", "0"],
     "screws_at_q0": ["0", "0", "1", "1", "-1", "0"]},
    {"id": "D", "kind": "revolute", "from": "L3", "to": "G",
     "screws": ["0", "0", "1", "1", "0", "0"],
     "screws_at_q0": ["0", "0", "1", "1", "0", "0"]}
  ]
}
)JSON";
    return doc;
}

const std::string& twojoint() {
    static const std::string doc = R"JSON({
  "bodies": ["G", "L1"],
  "root": "G",
  "joints": [
    {"id": "P1", "kind": "prismatic", "from": "G", "to": "L1",
     "screws": ["0", "0", "0", "1", "0", "0"]},
    {"id": "P2", "kind": "prismatic", "from": "G", "to": "L1",
     "screws": ["0", "0", "0", "1", "0", "0"]}
  ],
  "tree": ["P1"]
}
)JSON";
    return doc;
}

} // namespace tancone::examples
