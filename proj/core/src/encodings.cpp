#include "deltasys/sunflower_property.hpp"

#include "deltasys/catalog.hpp"
#include "deltasys/error.hpp"

#include <set>

namespace deltasys {

SetLabeling partition_encoding(const Structure& m, const Coloring& parts) {
    if (parts.parts.size() != m.size()) {
        throw Error(Errc::invalid_argument, "coloring must be total on the universe");
    }
    std::vector<std::size_t> seen;
    std::vector<AtomSet> labels;
    for (Element e = 0; e < m.size(); ++e) {
        const auto i = parts.parts[e];
        if (seen.size() <= i) {
            seen.resize(i + 1, 0);
        }
        const auto j = seen[i]++;
        labels.push_back(make_atom_set({Atom("p:0:" + std::to_string(i)),
                                        Atom("p:" + std::to_string(i + 1) + ":" + std::to_string(j))}));
    }
    return SetLabeling(m, std::move(labels), 2);
}

SetLabeling split_encoding(const Structure& b, const std::vector<std::string>& e) {
    std::set<std::string> inside;
    for (const auto& id : e) {
        b.require(id);
        inside.insert(id);
    }
    auto fresh = [&](std::string tag) {
        while (b.index_of(tag)) {
            tag += "'";
        }
        return tag;
    };
    const Atom t0(fresh("t0"));
    const Atom t1(fresh("t1"));
    std::vector<AtomSet> labels;
    for (const auto& id : b.universe()) {
        labels.push_back(make_atom_set({inside.count(id) ? t0 : t1, Atom(id)}));
    }
    return SetLabeling(b, std::move(labels), 2);
}

SetLabeling scattered_block_encoding(const std::vector<std::pair<std::string, Structure>>& blocks) {
    std::set<std::string> ids;
    for (const auto& [name, block] : blocks) {
        if (block.signature() != order_signature()) {
            throw Error(Errc::signature_mismatch, "blocks must be linear orders over '<'");
        }
        if (!ids.insert(name).second) {
            throw Error(Errc::invalid_argument, "id clash: " + name);
        }
    }
    for (const auto& [name, block] : blocks) {
        for (const auto& x : block.universe()) {
            if (!ids.insert(x).second) {
                throw Error(Errc::invalid_argument, "id clash: " + x);
            }
        }
    }
    StructureBuilder builder(order_signature());
    std::vector<AtomSet> labels;
    std::vector<std::size_t> offset;
    for (const auto& [name, block] : blocks) {
        offset.push_back(builder.size());
        for (const auto& x : block.universe()) {
            builder.add_element(x);
            labels.push_back(make_atom_set({Atom(name), Atom(x)}));
        }
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& block = blocks[i].second;
        for (Element x = 0; x < block.size(); ++x) {
            for (std::size_t j = i + 1; j < blocks.size(); ++j) {
                for (Element y = 0; y < blocks[j].second.size(); ++y) {
                    builder.add_tuple(0, {static_cast<Element>(offset[i] + x), static_cast<Element>(offset[j] + y)});
                }
            }
        }
        for (const auto& t : block.table(0).tuples()) {
            builder.add_tuple(0, {static_cast<Element>(offset[i] + t[0]), static_cast<Element>(offset[i] + t[1])});
        }
    }
    return SetLabeling(builder.build(), std::move(labels), 2);
}

} // namespace deltasys
