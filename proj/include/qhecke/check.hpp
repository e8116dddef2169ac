#ifndef QHECKE_CHECK_HPP
#define QHECKE_CHECK_HPP

#include <string>
#include <vector>

namespace qhecke {

// One verified identity; `witness` carries the offending object on failure.
struct CheckItem {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct CheckList {
    std::vector<CheckItem> items;

    void add(const std::string &name, bool pass, const std::string &witness = "") {
        items.push_back({name, pass, pass ? "" : witness});
    }
    bool all_pass() const {
        for (const auto &it : items)
            if (!it.pass) return false;
        return true;
    }
    void append(const CheckList &other) {
        items.insert(items.end(), other.items.begin(), other.items.end());
    }
};

} // namespace qhecke

#endif
