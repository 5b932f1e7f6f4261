#pragma once

#include "paramcost/cocomo2.hpp"
#include "paramcost/cocomo81.hpp"
#include "paramcost/config.hpp"
#include "paramcost/fpa.hpp"

namespace paramcost {

/// Every overridable constant/table in one bundle: the single object the CLI
/// builds from defaults + an optional config file and threads through the
/// models.
struct ModelTables {
    cocomo81::Tables c81;
    cocomo2::Tables c2;
    fpa::Tables fp;

    static ModelTables defaults();

    /// Applies every recognized key. Any key outside the cocomo81./cocomo2./
    /// fpa. namespaces, or unknown within them, is a ConfigError.
    void apply(const KeyValueConfig& config);

    /// Full round-trippable dump of the current values.
    KeyValueConfig dump() const;
};

} // namespace paramcost
