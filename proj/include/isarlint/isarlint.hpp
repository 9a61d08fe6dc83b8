#pragma once

// Umbrella header.

#include "isarlint/command.hpp"
#include "isarlint/config.hpp"
#include "isarlint/cursor.hpp"
#include "isarlint/docgen.hpp"
#include "isarlint/document.hpp"
#include "isarlint/driver.hpp"
#include "isarlint/keyword_table.hpp"
#include "isarlint/lexer.hpp"
#include "isarlint/lint.hpp"
#include "isarlint/method.hpp"
#include "isarlint/method_parser.hpp"
#include "isarlint/presenter.hpp"
#include "isarlint/rule_sets.hpp"
#include "isarlint/rules.hpp"
#include "isarlint/stats.hpp"
#include "isarlint/statement.hpp"
#include "isarlint/store.hpp"
#include "isarlint/token.hpp"
