#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "conerank/io/api.hpp"
#include "support/printing.hpp"

using namespace conerank;
using namespace conerank::io;

namespace {

std::filesystem::path temp_store(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() /
               ("conerank-" + name + "-" + std::to_string(std::random_device{}()));
    std::filesystem::remove_all(dir);
    return dir;
}

int error_status(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return http_status(e);
    }
    return 0;
}

const Json orthant = Json{{"rays", Json::array({Json::array({1, 0}), Json::array({0, 1})})}};

} // namespace

TEST(Csv, ThreeRows)
{
    auto ds = parse_csv("id,mark,credits\na,1,2\nb,0.5,3/4\nc,-1,2e1\n");
    EXPECT_EQ(ds.alternatives.size(), 3u);
    EXPECT_EQ(ds.criteria, (std::vector<std::string>{"mark", "credits"}));
    EXPECT_EQ(ds.alternatives.point(1), (Vector{ratio(1, 2), ratio(3, 4)}));
    EXPECT_EQ(ds.alternatives.point(2), (Vector{-1, 20}));
    EXPECT_FALSE(ds.labels.has_value());
}

TEST(Csv, DuplicateIdNamesTheRow)
{
    try {
        parse_csv("id,a,b\nx,1,2\n# comment\ny,1,2\nx,3,4\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::validation);
        EXPECT_NE(std::string(e.what()).find("row 5"), std::string::npos) << e.what();
        EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos) << e.what();
    }
}

TEST(Csv, LabelColumn)
{
    auto ds = parse_csv("id,a,b,label\nx,1,2,1\ny,2,1,0\nz,0,0,\nw,3,3\n");
    ASSERT_TRUE(ds.labels.has_value());
    EXPECT_EQ(*ds.labels, (std::vector<Label>{Label::acceptable, Label::unacceptable, Label::unlabeled, Label::unlabeled}));
    EXPECT_THROW(parse_csv("id,a,b,label\nx,1,2,yes\ny,1,1,0\n"), Error);
}

TEST(Csv, Rejections)
{
    EXPECT_THROW(parse_csv(""), Error);
    EXPECT_THROW(parse_csv("id,a,b\nx,1,2\n"), Error);          // N < 2
    EXPECT_THROW(parse_csv("id,a\nx,1\ny,2\n"), Error);         // d < 2
    EXPECT_THROW(parse_csv("id,a,b\nx,1,two\ny,1,1\n"), Error); // non-numeric
    EXPECT_THROW(parse_csv("id,a,b\nx,1\ny,1,1\n"), Error);     // short row
    EXPECT_THROW(parse_csv("name,a,b\nx,1,2\ny,1,1\n"), Error);
}

TEST(Csv, CanonicalRoundTrip)
{
    auto ds = parse_csv("id,a,b,label\nx,0.1,2,1\ny,1/3,-0.25,\n");
    auto again = parse_csv(to_csv(ds));
    EXPECT_EQ(again.alternatives.points(), ds.alternatives.points());
    EXPECT_EQ(*again.labels, *ds.labels);
    EXPECT_EQ(to_csv(again), to_csv(ds));
}

TEST(Json, NumbersAreReadExactly)
{
    EXPECT_EQ(parse_number(Json(7), "t"), 7);
    EXPECT_EQ(parse_number(Json(0.7), "t"), ratio(7, 10));
    EXPECT_EQ(parse_number(Json("2/6"), "t"), ratio(1, 3));
    EXPECT_THROW(parse_number(Json(true), "t"), Error);
}

TEST(Json, ConeConfigs)
{
    auto a = parse_cone(orthant);
    auto b = parse_cone(Json{{"dual_rays", Json::array({Json::array({1, 0}), Json::array({0, 1})})}});
    auto c = parse_cone(Json{{"weight_bounds", Json{{"min", Json::array({0, 0})}, {"max", Json::array({1, 1})}}}});
    EXPECT_EQ(a.dual_rays(), b.dual_rays());
    EXPECT_EQ(a.dual_rays(), c.dual_rays());
    auto panel = parse_cone(Json{{"weight_bounds", Json{{"min", Json::array({0.7, 0.2})}, {"max", Json::array({0.8, 0.3})}}}});
    auto expected = PolyhedralCone::from_dual_rays({vec({0.7, 0.3}), vec({0.8, 0.2})}, 2);
    EXPECT_EQ(panel.dual_rays(), expected.dual_rays());
    EXPECT_EQ(parse_cone(cone_config(panel)).dual_rays(), panel.dual_rays());
    EXPECT_THROW(parse_cone(Json::object()), Error);
    EXPECT_THROW(parse_cone(Json{{"rays", Json::array({Json::array({1, 0})})}, {"dual_rays", Json::array({Json::array({1, 0})})}}),
                 Error);
    try {
        parse_cone(Json{{"weight_bounds", Json{{"min", Json::array({0.6, 0.6})}, {"max", Json::array({0.9, 0.9})}}}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::infeasible_cone);
    }
}

TEST(Json, DatasetRoundTrip)
{
    auto ds = parse_csv("id,a,b,label\nx,0.1,2,1\ny,1/3,-0.25,\n");
    auto back = parse_dataset_json(dataset_json(ds));
    EXPECT_EQ(back.alternatives.points(), ds.alternatives.points());
    EXPECT_EQ(back.alternatives.ids(), ds.alternatives.ids());
    EXPECT_EQ(*back.labels, *ds.labels);
    EXPECT_EQ(back.criteria, ds.criteria);
}

TEST(Store, IngestIsContentAddressed)
{
    Store store(temp_store("ingest"));
    auto first = store.ingest(parse_csv("id,a,b\nx,1,2\ny,3,4\n"));
    EXPECT_TRUE(first.created);
    EXPECT_EQ(first.dataset.revision, 1u);
    EXPECT_EQ(first.dataset.id.size(), 16u);
    // Same values spelled differently: same canonical content, same id.
    auto again = store.ingest(parse_csv("id,a,b\nx,1.0,4/2\ny,3,4\n"));
    EXPECT_FALSE(again.created);
    EXPECT_EQ(again.dataset.id, first.dataset.id);
    auto other = store.ingest(parse_csv("id,a,b\nx,1,2\ny,3,5\n"));
    EXPECT_NE(other.dataset.id, first.dataset.id);
}

TEST(Store, ExactCoordinatesSurvive)
{
    Store store(temp_store("exact"));
    auto ds = parse_csv("id,a,b\nx,0.1,1/3\ny,-7/11,1e-3\n");
    auto in = store.ingest(ds);
    auto back = store.get(in.dataset.id);
    EXPECT_EQ(back.alternatives.points(), ds.alternatives.points());
}

TEST(Store, RevisionsAndConflicts)
{
    Store store(temp_store("revisions"));
    auto in = store.ingest(parse_csv("id,a,b\nx,1,2\ny,3,4\n"));
    const auto id = in.dataset.id;
    Dataset next = in.dataset;
    next.alternatives = next.alternatives.with_added({"z"}, {Vector{5, 5}});
    auto saved = store.commit(id, 1, next);
    EXPECT_EQ(saved.revision, 2u);
    EXPECT_EQ(store.latest_revision(id), 2u);
    EXPECT_EQ(store.load(id, 1)->alternatives.size(), 2u);
    EXPECT_EQ(store.get(id).alternatives.size(), 3u);
    EXPECT_EQ(error_status([&] { store.commit(id, 1, next); }), 409);
    EXPECT_EQ(error_status([&] { store.get(id, 1); }), 409);
    EXPECT_EQ(error_status([&] { store.get("0123456789abcdef"); }), 404);
    EXPECT_EQ(error_status([&] { store.get("../../etc/passwd"); }), 404);
}

TEST(Api, TwoPointChainRanks)
{
    Json req{{"csv", "id,c1,c2\na,0,0\nb,1,1\n"}, {"cone", orthant}};
    auto r = handle("rank", req, nullptr);
    ASSERT_EQ(r.status, 200) << dump(r.body);
    EXPECT_EQ(r.body["ranks"], (Json{{"a", 1}, {"b", 2}}));
    EXPECT_EQ(r.body["max_rank"], Json::array({"b"}));
}

TEST(Api, ErrorKindsMapToStatusesAndExitCodes)
{
    const std::string csv = "id,c1,c2\na,0,0\nb,1,1\n";
    auto bad_csv = handle("rank", Json{{"csv", "id,c1\na,1\n"}, {"cone", orthant}}, nullptr);
    EXPECT_EQ(bad_csv.status, 400);
    EXPECT_EQ(bad_csv.exit_code, 2);
    auto zero = handle("rank", Json{{"csv", csv}, {"cone", Json{{"rays", Json::array({Json::array({0, 0})})}}}}, nullptr);
    EXPECT_EQ(zero.status, 422);
    EXPECT_EQ(zero.exit_code, 3);
    EXPECT_EQ(zero.body["error"]["kind"], "infeasible_cone");
    auto flat = handle("classify", Json{{"csv", csv}, {"cone", Json{{"dual_rays", Json::array({Json::array({1, 0})})}}}}, nullptr);
    EXPECT_EQ(flat.status, 422);
    EXPECT_EQ(flat.exit_code, 4);
    auto unknown = handle("nope", Json{{"csv", csv}, {"cone", orthant}}, nullptr);
    EXPECT_EQ(unknown.status, 400);
}

TEST(Api, WhatIfRemovalsAndAdditions)
{
    Json req{{"csv", "id,c1,c2\nx,1,0\ny,0,2\np,-1,1\n"}, {"cone", orthant}};
    req["additions"] = Json::array();
    for (int k = 1; k <= 5; ++k) {
        req["additions"].push_back(Json{{"id", "z" + std::to_string(k)},
                                        {"point", Json::array({std::to_string(9 - k) + "/10", std::to_string(-k) + "/10"})}});
    }
    auto r = handle("whatif", req, nullptr);
    ASSERT_EQ(r.status, 200) << dump(r.body);
    EXPECT_EQ(r.body["after"]["x"], 6);
    EXPECT_EQ(r.body["after"]["y"], 2);
    EXPECT_EQ(r.body["pairs"][0]["kind"], "strict");

    Json removal{{"csv", "id,c1,c2\na,0,0\nb,1,1\nc,2,2\n"}, {"cone", orthant}, {"removals", Json::array({"a"})}};
    auto rr = handle("whatif", removal, nullptr);
    EXPECT_EQ(rr.body["after"], (Json{{"b", 1}, {"c", 2}}));
    EXPECT_TRUE(rr.body["pairs"].empty());
}

TEST(Api, BudgetWarning)
{
    std::string csv = "id,a,b,c,d,e\nx,1,2,3,4,5\ny,5,4,3,2,1\n";
    Json cone{{"weight_bounds", Json{{"min", Json::array({0, 0, 0, 0, 0})}, {"max", Json::array({1, 1, 1, 1, 1})}}}};
    auto r = handle("rank", Json{{"csv", csv}, {"cone", cone}}, nullptr);
    ASSERT_EQ(r.status, 200) << dump(r.body);
    ASSERT_EQ(r.body["warnings"].size(), 1u);
}

TEST(Api, WhatIfIsIdempotent)
{
    Json req{{"csv", "id,c1,c2\nx,1,0\ny,0,2\n"}, {"cone", orthant}, {"additions", Json::array({Json::array({0.5, -1})})}};
    EXPECT_EQ(dump(handle("whatif", req, nullptr).body), dump(handle("whatif", req, nullptr).body));
}
