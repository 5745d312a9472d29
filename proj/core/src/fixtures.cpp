#include "divconv/fixtures.hpp"

#include <algorithm>

#include "divconv/errors.hpp"

namespace divconv::fixtures {

namespace {

// "?p/q" marks a value printed without an operator; "absent" a skipped index.
PrintedCoefficient coef(std::string_view text) {
  if (text == "absent") return {BigRational(0), PrintAnomaly::TermAbsent};
  if (!text.empty() && text.front() == '?') return {parse_rational(text.substr(1)), PrintAnomaly::OperatorMissing};
  return {parse_rational(text), PrintAnomaly::None};
}

std::map<std::int64_t, PrintedCoefficient> sigma3_terms(
    std::initializer_list<std::pair<std::int64_t, std::string_view>> items) {
  std::map<std::int64_t, PrintedCoefficient> out;
  for (const auto& [delta, text] : items) out.emplace(delta, coef(text));
  return out;
}

std::vector<PrintedCoefficient> cusp_terms(std::initializer_list<std::string_view> items) {
  std::vector<PrintedCoefficient> out;
  for (auto text : items) out.push_back(coef(text));
  return out;
}

PrintedTail tail(std::int64_t divisor, std::string_view per_n) {
  return {BigRational(1, 24), parse_rational(per_n), divisor};
}

EtaQuotient eta(std::int64_t level, std::map<std::int64_t, int> exps) { return EtaQuotient(level, std::move(exps)); }

std::vector<FixtureGenerator> from_table(const ExponentTable& t, std::int64_t level, std::size_t rows) {
  std::vector<FixtureGenerator> out;
  auto divs = divisors(t.level);
  for (std::size_t i = 0; i < rows; ++i) {
    std::map<std::int64_t, int> m;
    for (std::size_t k = 0; k < divs.size(); ++k) {
      if (t.rows[i][k] != 0) m[divs[k]] = t.rows[i][k];
    }
    out.push_back({eta(level, std::move(m)), "B" + std::to_string(t.level) + "," + std::to_string(i + 1), false});
  }
  return out;
}

}  // namespace

const ExponentTable& table_level33() {
  static const ExponentTable t{33,
                               {
                                   {0, 8, 0, 0},
                                   {4, 0, 4, 0},
                                   {3, 1, 3, 1},
                                   {2, 2, 2, 2},
                                   {1, 3, 1, 3},
                                   {0, 4, 0, 4},
                                   {-1, 5, -1, 5},
                                   {-2, 6, -2, 6},
                                   {6, 0, 0, 2},
                                   {4, -2, -2, 8},
                               }};
  return t;
}

const ExponentTable& table_level40() {
  // divisors 1, 2, 4, 5, 8, 10, 20, 40
  static const ExponentTable t{40,
                               {
                                   {4, 0, 0, 4, 0, 0, 0, 0},
                                   {0, 4, 0, 0, 0, 4, 0, 0},
                                   {2, 0, 0, -2, 0, 8, 0, 0},
                                   {0, 0, 4, 0, 0, 0, 4, 0},
                                   {0, 0, 0, 0, 0, 4, 4, 0},
                                   {0, 2, 0, 0, 0, -2, 8, 0},
                                   {2, -2, 0, -2, 0, 2, 8, 0},
                                   {0, 0, 0, 0, 4, 0, 0, 4},
                                   {0, 0, 0, 0, 2, 4, -4, 6},
                                   {2, -2, 2, 2, -2, 0, 0, 6},
                                   {1, 0, 0, -1, 1, 2, -2, 7},
                                   {0, 0, 2, 0, 0, 0, -2, 8},
                                   {0, 4, 0, 0, -2, 0, -4, 10},
                                   {0, 2, -2, 0, 0, -2, 2, 8},
                               }};
  return t;
}

const ExponentTable& table_level56() {
  // divisors 1, 2, 4, 7, 8, 14, 28, 56
  static const ExponentTable t{56,
                               {
                                   {5, -1, 0, 5, 0, -1, 0, 0},
                                   {2, 2, 0, 2, 0, 2, 0, 0},
                                   {6, -2, 0, -2, 0, 6, 0, 0},
                                   {0, 2, 2, 0, 0, 2, 2, 0},
                                   {0, 0, 2, 0, 0, 4, 2, 0},
                                   {0, 6, -2, 0, 0, -2, 6, 0},
                                   {0, 4, -2, 0, 0, 0, 6, 0},
                                   {1, 1, 0, 1, 0, -3, 8, 0},
                                   {0, 1, 1, 0, 0, -3, 9, 0},
                                   {0, 0, 0, 0, 2, 0, 4, 2},
                                   {0, -2, 8, 0, -2, 2, -4, 6},
                                   {0, 0, 6, 0, -2, 0, -2, 6},
                                   {0, 0, 3, 0, -1, 4, -5, 7},
                                   {0, 0, 4, 0, -2, 0, 0, 6},
                                   {0, 2, 2, 0, -2, -2, 2, 6},
                                   {0, 1, 1, 0, 0, 1, -3, 8},
                                   {0, 3, -1, 0, 0, -1, -1, 8},
                                   {0, 0, 1, 0, 1, 0, -3, 9},
                                   {0, 1, 0, 0, -1, -3, 4, 7},
                                   {-2, 5, -3, 2, 0, -5, 7, 4},
                               }};
  return t;
}

std::vector<std::int64_t> basis_levels() { return {10, 11, 12, 15, 24, 33, 40, 56}; }

const std::vector<FixtureGenerator>& basis_generators(std::int64_t level) {
  static const std::map<std::int64_t, std::vector<FixtureGenerator>> all = [] {
    std::map<std::int64_t, std::vector<FixtureGenerator>> m;
    m[33] = from_table(table_level33(), 33, 10);
    m[40] = from_table(table_level40(), 40, 14);
    m[56] = from_table(table_level56(), 56, 20);
    // The first three level-40 rows already live at level 10.
    m[10] = from_table(table_level40(), 10, 3);
    m[11] = {
        {eta(11, {{1, 2}, {11, 2}}), "B'33,1", true},
        {eta(11, {{1, 4}, {11, 4}}), "B33,2", false},
    };
    m[15] = {
        {eta(15, {{1, 4}, {5, 4}}), "B15,1", false},
        {eta(15, {{1, 2}, {3, 2}, {5, 2}, {15, 2}}), "B15,2", false},
        {eta(15, {{3, 4}, {15, 4}}), "B15,3", false},
        {eta(15, {{1, 3}, {3, 1}, {5, -3}, {15, 7}}), "B15,4", false},
    };
    std::vector<FixtureGenerator> b24 = {
        {eta(24, {{1, 2}, {2, 2}, {3, 2}, {6, 2}}), "B24,1", false},
        {eta(24, {{2, 2}, {4, 2}, {6, 2}, {12, 2}}), "B24,2", false},
        {eta(24, {{2, 4}, {4, -2}, {12, 6}}), "B24,3", false},
        {eta(24, {{4, 2}, {8, 2}, {12, 2}, {24, 2}}), "B24,4", false},
        {eta(24, {{2, 2}, {4, -2}, {6, -2}, {8, 2}, {12, 6}, {24, 2}}), "B24,5", false},
        {eta(24, {{4, 4}, {8, -2}, {24, 6}}), "B24,6", false},
        {eta(24, {{2, 2}, {6, -2}, {8, -2}, {12, 4}, {24, 6}}), "B24,7", false},
        {eta(24, {{1, -1}, {2, -1}, {3, 3}, {4, 3}, {6, -1}, {8, -3}, {12, -1}, {24, 9}}), "B24,8", false},
    };
    m[24] = b24;
    for (std::size_t i = 0; i < 3; ++i) m[12].push_back({EtaQuotient(12, b24[i].eta.exponents()), b24[i].label, false});
    return m;
  }();
  auto it = all.find(level);
  if (it == all.end()) throw UnknownFixtureError("no embedded basis for level " + std::to_string(level));
  return it->second;
}

const std::vector<PrintedExpansion>& printed_expansions() {
  static const std::vector<PrintedExpansion> all = {
      {1, 33, 1024,
       sigma3_terms({{1, "2300736/1271"}, {3, "-59459328/77531"}, {11, "271016064/1271"}, {33, "-75206279808/77531"}}),
       cusp_terms({"-348480/1271", "-14117760/1271", "-6573339072/77531", "-26803856448/77531", "-62014527936/77531",
                   "-97134678144/77531", "-87378566400/77531", "-742808448/1271", "44352/1271", "-4447872/1271"})},
      {3, 11, 64,
       sigma3_terms({{1, "-348480/1271"}, {3, "106313472/77531"}, {11, "-34793088/1271"}, {33, "80875631232/77531"}}),
       cusp_terms({"348480/1271", "3136320/1271", "1346173632/77531", "5361496704/77531", "11895235776/77531",
                   "17925551424/77531", "15428171520/77531", "127847808/1271", "-44352/1271", "4447872/1271"})},
      {1, 40, 1521,
       sigma3_terms({{1, "26800/117"},
                     {2, "43520/117"},
                     {4, "245120/39"},
                     {5, "-26800/117"},
                     {8, "-1766400/13"},
                     {10, "-127760/117"},
                     {20, "-357440/39"},
                     {40, "6558720/13"}}),
       cusp_terms({"192224/117", "439744/117", "304832/39", "1061120/39", "41840/3", "-15360", "-24320/3",
                   "1688320/39", "116800", "-128000/3", "-485120/3", "-1130240/3", "-121280/3", "-69120"})},
      {5, 8, 9,
       sigma3_terms({{1, "5920/117"},
                     {2, "-76000/117"},
                     {4, "-16960/39"},
                     {5, "668000/117"},
                     {8, "721920/13"},
                     {10, "-8240/117"},
                     {20, "-95360/39"},
                     {40, "-721920/13"}}),
       cusp_terms({"-5920/117", "22720/117", "-59200/39", "12800/39", "-38800/3", "7680", "-47360/3", "-505088/39",
                   "-67520", "-12800/3", "113920/3", "298240/3", "63040/3", "69120"})},
      {1, 56, 3025,
       sigma3_terms({{1, "1284/5"},
                     {2, "-420"},
                     {4, "31584/5"},
                     {7, "-1764/5"},
                     {8, "-32256/5"},
                     {14, "-588"},
                     {28, "-51744/5"},
                     {56, "3687936/5"}}),
       cusp_terms({"11916/5", "92604/5", "29568", "1140216/5", "-411936", "2557632/5", "223608", "3998400", "4042752",
                   "145152/5", "-8064", "-48384", "absent", "532224/5", "161280", "-225792/5", "129024", "2515968/5",
                   "1354752", "-225792"})},
      {7, 8, 1,
       sigma3_terms({{1, "-308/25"},
                     {2, "1876/25"},
                     {4, "-40096/25"},
                     {7, "285908/25"},
                     {8, "?409088/25"},
                     {14, "-27076/25"},
                     {28, "-60704/25"},
                     {56, "-562688/25"}}),
       cusp_terms({"308/25", "2436/25", "11648/25", "121352/25", "-101472/25", "288064/25", "-87864/25",
                   "2190912/25", "1821312/25", "201984/25", "29568", "?284928/5", "-59136", "-1512192/25", "59136",
                   "6724096/25", "118272", "1616896/25", "430080", "53760"})},
      {1, 10, 81, sigma3_terms({{1, "2640/13"}, {2, "-1920/13"}, {5, "-12000/13"}, {10, "264000/13"}}),
       cusp_terms({"2976/13", "14400/13", "-960"})},
      {2, 5, 9, sigma3_terms({{1, "-480/13"}, {2, "10560/13"}, {5, "66000/13"}, {10, "-48000/13"}}),
       cusp_terms({"480/13", "-576/13", "960"})},
      {1, 11, 100, sigma3_terms({{1, "6240/49"}, {11, "5524320/49"}}), cusp_terms({"17280/49", "77184/49"})},
      {1, 12, 121,
       sigma3_terms({{1, "1056/5"}, {2, "-432/5"}, {3, "-1296/5"}, {4, "-2304/5"}, {6, "-3888/5"}, {12, "152064/5"}}),
       cusp_terms({"1584/5", "4896/5", "864"})},
      {3, 4, 1,
       sigma3_terms({{1, "-144/5"}, {2, "-432/5"}, {3, "9504/5"}, {4, "16896/5"}, {6, "-3888/5"}, {12, "-20736/5"}}),
       cusp_terms({"144/5", "2016/5", "-864"})},
      {1, 15, 196, sigma3_terms({{1, "2976/13"}, {3, "-3456/13"}, {5, "-144000/13"}, {15, "756000/13"}}),
       cusp_terms({"5760/13", "2304", "48384/13", "-3456"})},
      {3, 5, 4, sigma3_terms({{1, "-576/13"}, {3, "25056/13"}, {5, "204000/13"}, {15, "-216000/13"}}),
       cusp_terms({"576/13", "576", "8640/13", "3456"})},
      {1, 24, 529,
       sigma3_terms({{1, "672"},
                     {2, "33264/5"},
                     {3, "-576"},
                     {4, "-36576/5"},
                     {6, "-35424/5"},
                     {8, "-4608/5"},
                     {12, "27936/5"},
                     {24, "649728/5"}}),
       cusp_terms({"432", "-44064/5", "-8640", "-508608/5", "-55296", "-316224", "-276480", "-857088"})},
      {3, 8, 25,
       sigma3_terms({{1, "0"},
                     {2, "864/5"},
                     {3, "2016"},
                     {4, "-2016/5"},
                     {6, "-3024/5"},
                     {8, "72192/5"},
                     {12, "-6624/5"},
                     {24, "-41472/5"}}),
       cusp_terms({"0", "-864/5", "-1296", "-7488/5", "0", "-15552", "0", "-27648"})},
  };
  return all;
}

const std::vector<PrintedW>& printed_w_formulas() {
  static const std::vector<PrintedW> all = {
      {1, 33,
       sigma3_terms({{1, "-13859/335544"}, {3, "51614/2558523"}, {11, "-7129/1271"}, {33, "60271327/1860744"}}),
       {tail(1, "-1/132"), tail(33, "-1/4")},
       cusp_terms({"55/7626", "4085/13981", "11412047/5117046", "15511491/1705682", "35888037/1705682",
                   "28106099/852841", "25283150/852841", "214933/13981", "-7/7626", "117/1271"})},
      {3, 11,
       sigma3_terms({{1, "55/7626"}, {3, "12869/620248"}, {11, "15089/10168"}, {33, "-6382231/232593"}}),
       {tail(3, "-1/44"), tail(11, "-1/12")},
       cusp_terms({"-55/7626", "-165/2542", "-2337107/5117046", "-1551359/852841", "-6883817/1705682",
                   "-943053/155062", "-4464170/852841", "-3363/1271", "7/7626", "-117/1271"})},
      {1, 40,
       sigma3_terms({{1, "1/4212"},
                     {2, "-17/2106"},
                     {4, "-383/2808"},
                     {5, "335/67392"},
                     {8, "115/39"},
                     {10, "1597/67392"},
                     {20, "1117/5616"},
                     {40, "-34/13"}}),
       {tail(1, "-1/160"), tail(40, "-1/4")},
       cusp_terms({"-6007/168480", "-6871/84240", "-4763/28080", "-829/1404", "-523/1728", "1/3", "19/108",
                   "-1319/1404", "-365/144", "25/27", "379/108", "883/108", "379/432", "3/2"})},
      {5, 8,
       sigma3_terms({{1, "-37/33696"},
                     {2, "475/33696"},
                     {4, "53/5616"},
                     {5, "425/67392"},
                     {8, "-34/39"},
                     {10, "103/67392"},
                     {20, "149/2808"},
                     {40, "47/39"}}),
       {tail(5, "-1/32"), tail(8, "-1/20")},
       cusp_terms({"37/33696", "-71/16848", "185/5616", "-5/702", "485/1728", "-1/6", "37/108", "1973/7020",
                   "211/144", "5/54", "-89/108", "-233/108", "-197/432", "-3/2"})},
      {1, 56,
       sigma3_terms({{1, "-1/3840"},
                     {2, "5/768"},
                     {4, "-47/480"},
                     {7, "7/1280"},
                     {8, "1/10"},
                     {14, "7/768"},
                     {28, "77/480"},
                     {56, "7/30"}}),
       {tail(1, "-1/224"), tail(56, "-1/4")},
       cusp_terms({"-331/8960", "-7717/26880", "-11/24", "-6787/1920", "613/96", "-1903/240", "-1331/384",
                   "-2975/48", "-188/3", "-9/20", "1/8", "3/4", "absent", "-33/20", "-5/2", "?7/10", "-2", "-39/5",
                   "-21", "7/2"})},
      {7, 8,
       sigma3_terms({{1, "11/57600"},
                     {2, "-67/57600"},
                     {4, "179/7200"},
                     {7, "289/57600"},
                     {8, "-7/450"},
                     {14, "967/57600"},
                     {28, "271/7200"},
                     {56, "157/450"}}),
       {tail(7, "-1/32"), tail(8, "-1/28")},
       cusp_terms({"-11/57600", "-29/19200", "-13/1800", "-2167/28800", "151/2400", "-643/3600", "523/9600",
                   "-11411/8400", "-1581/1400", "-263/2100", "-11/24", "-53/60", "11/12", "1969/2100", "-11/12",
                   "-13133/3150", "-11/6", "-1579/1575", "-20/3", "-5/6"})},
      {1, 10, sigma3_terms({{1, "1/312"}, {2, "1/78"}, {5, "25/312"}, {10, "25/78"}}),
       {tail(1, "-1/40"), tail(10, "-1/4")},
       // b40,1(n/2) is the second level-10 generator.
       cusp_terms({"-31/1560", "-5/52", "1/12"})},
      {2, 5, sigma3_terms({{1, "1/312"}, {2, "1/78"}, {5, "25/312"}, {10, "25/78"}}),
       {tail(2, "-1/20"), tail(5, "-1/8")}, cusp_terms({"-1/312", "1/260", "-1/12"})},
      {1, 11, sigma3_terms({{1, "5/1464"}, {11, "605/1464"}}), {tail(1, "-1/44"), tail(11, "-1/4")},
       cusp_terms({"-14615/386496", "-90493/386496"})},
      {1, 12,
       sigma3_terms({{1, "1/480"}, {2, "1/160"}, {3, "3/160"}, {4, "1/30"}, {6, "9/160"}, {12, "3/10"}}),
       {tail(1, "-1/48"), tail(12, "-1/4")}, cusp_terms({"-11/480", "-17/240", "-1/16"})},
      {3, 4,
       sigma3_terms({{1, "1/480"}, {2, "1/160"}, {3, "3/160"}, {4, "1/30"}, {6, "9/160"}, {12, "3/10"}}),
       {tail(3, "-1/16"), tail(4, "-1/12")}, cusp_terms({"-1/480", "-7/240", "1/16"})},
      {1, 15, sigma3_terms({{1, "1/1560"}, {3, "1/65"}, {5, "25/39"}, {15, "-25/104"}}),
       {tail(1, "-1/60"), tail(15, "-1/4")}, cusp_terms({"-1/39", "-2/15", "-14/65", "1/5"})},
      {3, 5, sigma3_terms({{1, "1/390"}, {3, "7/520"}, {5, "-175/312"}, {15, "25/26"}}),
       {tail(3, "-1/20"), tail(5, "-1/8")}, cusp_terms({"-1/390", "-1/30", "-1/26", "-1/5"})},
      {1, 24,
       sigma3_terms({{1, "-1/64"},
                     {2, "-77/320"},
                     {3, "1/48"},
                     {4, "127/480"},
                     {6, "41/160"},
                     {8, "1/30"},
                     {12, "-97/480"},
                     {24, "3/10"}}),
       {tail(1, "-1/96"), tail(24, "-1/4")},
       cusp_terms({"-1/64", "51/160", "5/16", "883/240", "2", "183/16", "10", "31"})},
      {3, 8,
       sigma3_terms({{1, "0"},
                     {2, "-1/160"},
                     {3, "1/192"},
                     {4, "7/480"},
                     {6, "7/320"},
                     {8, "1/30"},
                     {12, "23/480"},
                     {24, "3/10"}}),
       {tail(3, "-1/32"), tail(8, "-1/12")}, cusp_terms({"0", "1/160", "3/64", "13/240", "0", "9/16", "0", "1"})},
  };
  return all;
}

const PrintedExpansion* find_expansion(std::int64_t alpha, std::int64_t beta) {
  for (const auto& e : printed_expansions()) {
    if (e.alpha == alpha && e.beta == beta) return &e;
  }
  return nullptr;
}

const PrintedW* find_w(std::int64_t alpha, std::int64_t beta) {
  for (const auto& w : printed_w_formulas()) {
    if (w.alpha == alpha && w.beta == beta) return &w;
  }
  return nullptr;
}

const std::vector<PrintedRelation>& printed_relations() {
  static const std::vector<PrintedRelation> all = {
      {33, 5, 1, 2}, {40, 1, 0, 2}, {15, 2, 0, 2}, {24, 1, 0, 2}, {24, 3, 0, 4}, {24, 5, 2, 2},
  };
  return all;
}

const std::vector<PrintedRepFormula>& printed_rep_formulas() {
  static const std::vector<PrintedRepFormula> all = {
      {Form::Hex, 1, 11, {{12, 1}, {-36, 3}, {12, 11}, {-36, 33}},
       {{144, 1, 11, 1}, {1296, 1, 11, 3}, {-432, 3, 11, 1}, {-432, 1, 33, 1}}, {}},
      {Form::Quad, 1, 10, {{8, 1}, {-32, 4}, {8, 10}, {-32, 40}},
       {{64, 1, 10, 1}, {1024, 1, 10, 4}, {-256, 2, 5, 2}, {-256, 1, 40, 1}}, {}},
      {Form::Quad, 2, 5, {{8, 2}, {-32, 8}, {8, 5}, {-32, 20}},
       {{64, 2, 5, 1}, {1024, 2, 5, 4}, {-256, 5, 8, 1}, {-256, 1, 10, 2}}, {}},
      {Form::Quad, 1, 14, {{8, 1}, {-32, 4}, {8, 14}, {-32, 56}},
       {{64, 1, 14, 1}, {1024, 1, 14, 4}, {-256, 2, 7, 2}, {-256, 1, 56, 1}}, {}},
      {Form::Quad, 2, 7, {{8, 2}, {-32, 8}, {8, 7}, {-32, 28}},
       {{64, 2, 7, 1}, {1024, 2, 7, 4}, {-256, 7, 8, 1}, {-256, 1, 14, 2}}, {}},
      {Form::Quad, 1, 1, {{16, 1}, {-64, 4}}, {{64, 1, 1, 1}, {1024, 1, 1, 4}, {-512, 1, 4, 1}},
       {{16, 1}, {-32, 2}, {256, 4}}},
      {Form::Quad, 1, 3, {{8, 1}, {-32, 4}, {8, 3}, {-32, 12}},
       {{64, 1, 3, 1}, {1024, 1, 3, 4}, {-256, 3, 4, 1}, {-256, 1, 12, 1}}, {}},
      {Form::Quad, 2, 3, {{8, 2}, {-32, 8}, {8, 3}, {-32, 12}},
       {{64, 1, 3, 1}, {1024, 1, 3, 4}, {-256, 3, 8, 1}, {-256, 1, 12, 1}}, {}},
      {Form::Quad, 1, 9, {{8, 1}, {-32, 4}, {8, 9}, {-32, 36}},
       {{64, 1, 9, 1}, {1024, 1, 9, 4}, {-256, 4, 9, 1}, {-256, 1, 36, 1}}, {}},
  };
  return all;
}

const std::vector<PrintedDimension>& printed_dimensions() {
  static const std::vector<PrintedDimension> all = {
      {33, 4, 10}, {40, 8, 14}, {56, 8, 20}, {24, 0, 8}, {12, 0, 3},
  };
  return all;
}

const std::vector<PrintedPairSet>& printed_pair_sets() {
  static const std::vector<PrintedPairSet> all = {
      {120, Form::Quad, {{1, 30}, {2, 15}, {3, 10}, {5, 6}}},
      {120, Form::Hex, {{1, 40}, {5, 8}}},
      {40, Form::Quad, {{1, 10}, {2, 5}}},
      {56, Form::Quad, {{1, 14}, {2, 7}}},
      {33, Form::Hex, {{1, 11}}},
  };
  return all;
}

}  // namespace divconv::fixtures
