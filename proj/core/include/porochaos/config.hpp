#pragma once

#include <filesystem>

#include "porochaos/campaign.hpp"

namespace porochaos {

/// Parse a campaign config file (JSON). See configs/ for complete examples
/// of the three built-in scenarios and README.md for the schema.
CampaignConfig load_campaign_config(const std::filesystem::path& path);

}  // namespace porochaos
