#include "support.hpp"

#include <fstream>
#include <sstream>

namespace tarzan::testing {

Network net_of(const std::string& text, const std::string& path) { return parse_model({{path, text}}); }

Network net_of_all(const std::vector<std::string>& texts) {
    std::vector<ModelSource> sources;
    for (std::size_t i = 0; i < texts.size(); ++i) sources.push_back({"m" + std::to_string(i) + ".ta", texts[i]});
    return parse_model(sources);
}

Region region_of(const std::string& text, const Network& net) { return parse_region(text, net); }

std::string show(const Region& region, const Network& net) { return render_region(region, NameTable::of(net)); }

std::vector<ClockConstraint> atoms_for(int clock, int cm) {
    std::vector<ClockConstraint> out;
    for (int c = 0; c <= cm; ++c)
        for (Rel r : {Rel::lt, Rel::le, Rel::eq, Rel::ge, Rel::gt}) out.push_back({clock, r, c});
    return out;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace tarzan::testing
