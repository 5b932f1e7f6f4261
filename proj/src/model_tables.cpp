#include "paramcost/model_tables.hpp"

namespace paramcost {

ModelTables ModelTables::defaults() {
    return ModelTables{cocomo81::Tables::defaults(), cocomo2::Tables::defaults(),
                       fpa::Tables::defaults()};
}

void ModelTables::apply(const KeyValueConfig& config) {
    for (const auto& [key, value] : config.entries()) {
        (void)value;
        if (!key.starts_with("cocomo81.") && !key.starts_with("cocomo2.") &&
            !key.starts_with("fpa.")) {
            throw ConfigError("unknown config key '" + key +
                              "' (expected a cocomo81./cocomo2./fpa. key)");
        }
    }
    c81.apply(config);
    c2.apply(config);
    fp.apply(config);
}

KeyValueConfig ModelTables::dump() const {
    KeyValueConfig out;
    c81.dump_into(out);
    c2.dump_into(out);
    fp.dump_into(out);
    return out;
}

} // namespace paramcost
