#!/usr/bin/env python3
# Copyright 2026 The EVKG Toolkit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the small CSV fixture under data/fixture.

Deterministic; rerunning overwrites the files with identical content.
"""
import csv
import json
import pathlib
import sys

OUT = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parents[2] / "data" / "fixture")

SIZE = 0.02

# zip: (state, county, min_lon, min_lat)
ZIPS = {
    "07677": ("New Jersey", "Bergen", -74.07, 41.01),
    "07601": ("New Jersey", "Bergen", -74.06, 40.87),
    "07302": ("New Jersey", "Hudson", -74.06, 40.73),
    "07030": ("New Jersey", "Hudson", -74.04, 40.73),
    "08540": ("New Jersey", "Mercer", -74.68, 40.34),
    "08618": ("New Jersey", "Mercer", -74.79, 40.22),
    "08901": ("New Jersey", "Middlesex", -74.46, 40.48),
    "07960": ("New Jersey", "Morris", -74.50, 40.79),
    "95811": ("California", "Sacramento", -121.52, 38.57),
    "95814": ("California", "Sacramento", -121.50, 38.57),
    "98104": ("Washington", "King", -122.34, 47.58),
    # background areas: no 500 kV crossings, under 98 CCS vehicles a year
    "07102": ("New Jersey", "Essex", -74.18, 40.73),
    "07103": ("New Jersey", "Essex", -74.20, 40.73),
    "07104": ("New Jersey", "Essex", -74.18, 40.75),
    "08002": ("New Jersey", "Camden", -75.03, 39.93),
    "08003": ("New Jersey", "Camden", -74.97, 39.88),
    "08817": ("New Jersey", "Middlesex", -74.40, 40.51),
    "08820": ("New Jersey", "Middlesex", -74.37, 40.57),
    "08854": ("New Jersey", "Middlesex", -74.48, 40.55),
    "95816": ("California", "Sacramento", -121.47, 38.56),
    "98109": ("Washington", "King", -122.35, 47.62),
    "98101": ("Washington", "King", -122.34, 47.60),
}


def fmt(x):
    return f"{x:.4f}".rstrip("0").rstrip(".")


def rect(lon, lat):
    pts = [(lon, lat), (lon + SIZE, lat), (lon + SIZE, lat + SIZE), (lon, lat + SIZE), (lon, lat)]
    return "POLYGON ((" + ", ".join(f"{fmt(x)} {fmt(y)}" for x, y in pts) + "))"


def inside(zip_code, dx=0.5, dy=0.5):
    _, _, lon, lat = ZIPS[zip_code]
    return round(lon + SIZE * dx, 6), round(lat + SIZE * dy, 6)


def line(*pts):
    return "LINESTRING (" + ", ".join(f"{fmt(x)} {fmt(y)}" for x, y in pts) + ")"


def point(x, y):
    return f"POINT ({fmt(x)} {fmt(y)})"


def write(name, header, rows):
    with open(OUT / name, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def places():
    rows = []
    for z, (state, county, lon, lat) in ZIPS.items():
        same = f"http://stko-kwg.geog.ucsb.edu/lod/resource/zipcode.{z}" if state == "New Jersey" else ""
        rows.append([z, state, county, rect(lon, lat), same])
    write("places.csv", ["zip", "state", "county", "geometry", "kwg_sameas"], rows)


H24 = "24 hours daily  "


def stations():
    def st(sid, name, zip_code, access, network, hours, date, groups, pos=(0.5, 0.5), pricing="", parking="",
           user_group=""):
        lon, lat = pos if isinstance(pos[0], float) and abs(pos[0]) > 1 else inside(zip_code, *pos)
        return [sid, name, fmt(lon), fmt(lat), zip_code, access, network, hours, date, pricing, parking, user_group,
                groups]

    rows = [
        st("NJ01", "Hoboken Garage", "07030", "public", "ChargePoint Network", H24, "2020-05-01",
           "DCFC:J1772COMBO:4;DCFC:CHAdeMO:2", (0.3, 0.3), pricing="$0.35 per kWh"),
        st("NJ02", "Hoboken Terminal", "07030", "public", "Electrify America", H24, "2021-03-15",
           "DCFC:J1772COMBO:2;LEVEL2:J1772:4", (0.7, 0.6)),
        st("NJ03", "New Brunswick Plaza", "08901", "public", "EVgo", H24, "2019-07-20",
           "DCFC:J1772COMBO:4;DCFC:J1772COMBO:2;DCFC:CHAdeMO:6", (0.4, 0.4)),
        st("NJ04", "Rutgers Fleet Yard", "08901", "private", "", "fleet use only", "2021-01-10",
           "DCFC:J1772COMBO:4", (0.6, 0.7), user_group="Fleet"),
        st("NJ05", "Jersey City Supercharger", "07302", "public", "Tesla", H24, "2020-11-02", "DCFC:TESLA:8",
           (0.5, 0.2)),
        st("NJ06", "Jersey City Hub", "07302", "public", "EVgo", H24, "2021-06-30",
           "DCFC:J1772COMBO:20;LEVEL2:J1772COMBO:10", (0.5, 0.8), parking="Customers only"),
        st("NJ07", "Hackensack Mall", "07601", "public", "ChargePoint Network", "6am-10pm daily", "2019-02-14",
           "DCFC:J1772COMBO:5", (0.5, 0.5)),
        st("NJ08", "Princeton Library", "08540", "public", "ChargePoint Network", H24, "2020-09-09",
           "LEVEL2:J1772COMBO:2;LEVEL2:J1772:2", (0.5, 0.5)),
        st("NJ09", "Morristown Green", "07960", "public", "Greenlots", H24, "2021-08-01", "DCFC:J1772COMBO:3",
           (0.5, 0.5)),
        st("NJ10", "Trenton Station", "08618", "public", "EVgo", H24, "2021-04-04",
           "DCFC:CHAdeMO:2;DCFC:J1772COMBO:2", (0.5, 0.5)),
        st("NJ11", "Hudson Boundary Lot", "07030", "public", "EVgo", H24, "2020-01-01", "DCFC:J1772COMBO:50",
           (-74.04, 40.74)),
        st("NJ12", "Woodcliff Lake Office", "07677", "public", "", "business hours", "",
           "LEVEL2:J1772:2", (0.5, 0.5)),
        st("S1", "Capitol Garage", "95814", "public", "ChargePoint Network", H24, "2019-05-05",
           "DCFC:CHAdeMO:1;DCFC:J1772COMBO:1;LEVEL2:J1772:2", (0.2, 0.2)),
        st("S2", "Sacramento Plaza", "95814", "public", "EVgo", H24, "2020-05-05", "DCFC:CHAdeMO:2", (0.4, 0.2)),
        st("S3", "State Fleet Depot", "95814", "private", "ChargePoint Network", H24, "2018-03-03",
           "DCFC:CHAdeMO:2", (0.6, 0.2), user_group="Government fleet"),
        st("S4", "Old Town Lot", "95814", "public", "ChargePoint Network", "7am-7pm daily", "2020-02-02",
           "DCFC:CHAdeMO:1", (0.8, 0.2)),
        st("S5", "K Street", "95814", "public", "ChargePoint Network", H24, "2021-02-02", "LEVEL2:J1772:4",
           (0.2, 0.8)),
        st("S6", "Midtown", "95811", "public", "ChargePoint Network", H24, "2021-03-03", "DCFC:CHAdeMO:2",
           (0.5, 0.5)),
        st("S7", "Convention Center", "95814", "public", "ChargePoint Network", H24, "2021-07-07",
           "DCFC:CHAdeMO:2", (0.8, 0.8)),
        st("W1", "Pike Place", "98101", "public", "ChargePoint Network", H24, "2020-10-10",
           "LEVEL2:J1772:6", (0.5, 0.5)),
        st("W2", "Pioneer Square", "98104", "public", "Electrify America", H24, "2021-10-10",
           "DCFC:J1772COMBO:4", (0.5, 0.5)),
    ] + background_stations() + [
        # rejected: unknown connector token
        st("BAD1", "Broken Row", "07030", "public", "", H24, "2021-01-01", "DCFC:SAEJ3400:2"),
    ]
    write("stations.csv",
          ["station_id", "name", "lon", "lat", "zip", "access", "network", "operating_hours", "open_date",
           "pricing", "parking_restriction", "user_group", "charger_groups"], rows)


BACKGROUND = ["07102", "07103", "07104", "08002", "08003", "08817", "08820", "08854", "95816", "98109"]
NETWORKS = ["ChargePoint Network", "EVgo", "Electrify America", "Blink Network", ""]
GROUPS = ["LEVEL2:J1772:2", "LEVEL2:J1772:4;LEVEL1:NEMA:1", "DCFC:J1772COMBO:2;DCFC:CHAdeMO:1",
          "DCFC:TESLA:6", "LEVEL2:J1772:2;DCFC:J1772COMBO:1"]


def background_stations():
    rows = []
    for i, z in enumerate(BACKGROUND):
        for j in range(3):
            k = (i + j) % 5
            network = NETWORKS[k]
            rows.append([f"B{i:02d}{j}", f"Background {z}-{j}", *map(fmt, inside(z, 0.25 + 0.25 * j, 0.3 + 0.2 * j)),
                         z, "public", network, H24 if k % 2 == 0 else "Mon-Fri 8am-6pm",
                         f"{2018 + (i + j) % 4}-0{1 + j}-15", "", "", "", GROUPS[(i * 3 + j) % 5]])
    return rows


def transmission():
    def ln(aid, a, b, voltage, owner="PSE&G"):
        return [aid, "line", line(a, b), voltage, "", "", "", "", "", "IN SERVICE", owner]

    def across(zip_code):
        _, _, lon, lat = ZIPS[zip_code]
        y = lat + SIZE * 0.55
        return (lon - 0.01, y), (lon + SIZE + 0.01, y)

    rows = [
        ln("T500-HUD", (-74.08, 40.745), (-74.00, 40.745), "500"),
        ln("T500-MID", *across("08901"), "500"),
        ln("T500-PRN", *across("08540"), "500"),
        ln("T500-MOR", *across("07960"), "500", owner="JCP&L"),
        ln("T345-BER", *across("07601"), "345"),
        ln("T230-SAC", *across("95814"), "230", owner="SMUD"),
        ln("T500-KNG", *across("98101"), "500", owner="Seattle City Light"),
        ln("T230-OPEN", (-75.5, 39.5), (-75.4, 39.6), "230"),
        ["SUB-HOB", "substation", point(*inside("07030", 0.2, 0.8)), "", "230", "500", "", "", "", "IN SERVICE", ""],
        ["SUB-SEA", "substation", point(*inside("98101", 0.3, 0.3)), "", "115", "230", "", "", "", "IN SERVICE", ""],
        ["PLT-TRE", "plant", point(*inside("08618", 0.3, 0.7)), "", "", "", "52.5", "55.0", "50.25", "OP", ""],
        ["PLT-SEA", "plant", point(*inside("98104", 0.6, 0.4)), "", "", "", "120", "130", "118.5", "OP", ""],
    ]
    write("transmission.csv",
          ["asset_id", "kind", "geometry", "voltage_class", "min_voltage_kv", "max_voltage_kv", "summer_capacity_mw",
           "winter_capacity_mw", "operating_capacity_mw", "status", "owner"], rows)


# key: (vin8, make, model, model_year, technology, manufacturer, use_case, weight, chargers, connectors)
PRODUCTS = {
    "leaf21": ("1N4AZ1CP", "Nissan", "Leaf", 2021, "BEV", "Nissan North America", "Passenger", "Light",
               "LEVEL2;DCFC", "CHAdeMO;J1772"),
    "leaf18": ("1N4AZ1CO", "Nissan", "Leaf", 2018, "BEV", "Nissan North America", "Passenger", "Light",
               "LEVEL2;DCFC", "CHAdeMO;J1772"),
    "i3": ("WBY7Z2C5", "BMW", "i3", 2018, "BEV", "BMW of North America Inc.", "Compact", "Light-duty",
           "LEVEL2;DCFC", "J1772;J1772COMBO"),
    "bolt": ("1G1FY6S0", "Chevrolet", "Bolt EV", 2020, "BEV", "General Motors", "Passenger", "Light",
             "LEVEL2;DCFC", "J1772COMBO;J1772"),
    "model3": ("5YJ3E1EA", "Tesla", "Model 3", 2021, "BEV", "Tesla Inc", "Passenger", "Light", "LEVEL2;DCFC",
               "TESLA"),
    "mache": ("3FMTK3SU", "Ford", "Mustang Mach-E", 2021, "BEV", "Ford Motor Company", "Passenger", "Light",
              "LEVEL2;DCFC", "J1772COMBO;J1772"),
    "prius": ("JTDKARFP", "Toyota", "Prius Prime", 2020, "PHEV", "Toyota Motor", "Passenger", "Light", "LEVEL2",
              "J1772"),
    "outlander": ("JA4J24A5", "Mitsubishi", "Outlander", 2020, "PHEV", "Mitsubishi Motors", "Passenger", "Light",
                  "LEVEL2", "J1772"),
    "lightning": ("1FTVW1EL", "Ford", "F-150 Lightning", 2022, "BEV", "Ford Motor Company", "Pickup", "Medium",
                  "LEVEL2;DCFC", "J1772COMBO;J1772"),
}

# (zip, registration year, product, vehicles)
REGISTRATIONS = [
    ("07030", 2021, "bolt", 70), ("07030", 2021, "mache", 80), ("07030", 2021, "model3", 40),
    ("07030", 2020, "bolt", 30),
    ("08901", 2021, "bolt", 100), ("08901", 2021, "i3", 100), ("08901", 2021, "leaf21", 25),
    ("08901", 2019, "leaf18", 15),
    ("07302", 2021, "mache", 150), ("07302", 2021, "prius", 10), ("07302", 2020, "model3", 12),
    ("07601", 2021, "bolt", 60), ("07601", 2021, "lightning", 40),
    ("08540", 2021, "mache", 80), ("08540", 2020, "outlander", 6),
    ("07960", 2021, "bolt", 50), ("07960", 2021, "i3", 48),
    ("07677", 2019, "i3", 36), ("07677", 2021, "bolt", 20),
    ("08618", 2020, "prius", 9),
    ("95814", 2021, "leaf21", 5), ("95811", 2021, "model3", 3),
    ("98101", 2021, "model3", 7), ("98104", 2020, "bolt", 4),
] + [
    (z, 2019 + (i + j) % 3, key, 3 + (i * 7 + j * 5) % 20)
    for i, z in enumerate(BACKGROUND)
    for j, key in enumerate(["bolt", "model3", "leaf21", "prius", "mache", "outlander", "i3", "lightning"])
    if (i + j) % 2 == 0
]


def registrations():
    rows = []
    for zip_code, year, key, n in REGISTRATIONS:
        vin8, make, model, my, tech, mfr, use, weight, chargers, connectors = PRODUCTS[key]
        rows.extend([vin8, zip_code, my, year, make, model, tech, mfr, use, weight, chargers, connectors]
                    for _ in range(n))
    rows.append(["BAD", "07030", 2021, 2021, "Nissan", "Leaf", "BEV", "Nissan North America", "Passenger", "Light",
                 "LEVEL2", "J1772"])
    rows.append(["1N4AZ1CP", "7030", 2021, 2021, "Nissan", "Leaf", "BEV", "Nissan North America", "Passenger",
                 "Light", "LEVEL2", "J1772"])
    write("registrations.csv",
          ["vin8", "zip", "model_year", "registration_year", "make", "model", "technology", "manufacturer",
           "use_case", "weight_level", "charger_types", "connector_types"], rows)


def config():
    doc = {
        "registrations": "registrations.csv",
        "stations": "stations.csv",
        "transmission": "transmission.csv",
        "places": "places.csv",
        "output": "evkg.nt",
        "materialize": True,
        "subclass_closure": True,
    }
    (OUT / "config.json").write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    places()
    stations()
    transmission()
    registrations()
    config()
