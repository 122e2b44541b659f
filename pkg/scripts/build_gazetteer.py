#!/usr/bin/env python3
"""Regenerate src/gvdb/data/gazetteer.txt from the curated city table below.

The shipped gazetteer is a demonstrative sample, not a census product:
coordinates are approximate (plus or minus a few tenths of a degree) and
populations are rounded 2010s-era figures in thousands. Good enough for
geocoding demo maps and exercising city/state disambiguation; swap in a real
gazetteer file for production use.
"""

import os

# state -> [(city, lat, lon, population_in_thousands)]
CITIES = {
    "AL": [
        ("Birmingham", 33.52, -86.80, 212), ("Montgomery", 32.37, -86.30, 200),
        ("Mobile", 30.69, -88.04, 194), ("Huntsville", 34.73, -86.59, 190),
        ("Tuscaloosa", 33.21, -87.57, 99), ("Hoover", 33.41, -86.81, 85),
        ("Dothan", 31.22, -85.39, 68), ("Auburn", 32.61, -85.48, 63),
        ("Decatur", 34.61, -86.98, 55), ("Gadsden", 34.01, -86.01, 36),
        ("Florence", 34.80, -87.68, 40), ("Selma", 32.41, -87.02, 19),
    ],
    "AK": [
        ("Anchorage", 61.22, -149.90, 298), ("Fairbanks", 64.84, -147.72, 32),
        ("Juneau", 58.30, -134.42, 32), ("Wasilla", 61.58, -149.44, 9),
        ("Sitka", 57.05, -135.33, 9), ("Ketchikan", 55.34, -131.65, 8),
        ("Kenai", 60.55, -151.26, 7), ("Kodiak", 57.79, -152.41, 6),
        ("Bethel", 60.79, -161.76, 6), ("Palmer", 61.60, -149.11, 7),
    ],
    "AZ": [
        ("Phoenix", 33.45, -112.07, 1563), ("Tucson", 32.22, -110.93, 531),
        ("Mesa", 33.42, -111.83, 471), ("Chandler", 33.31, -111.84, 254),
        ("Glendale", 33.54, -112.19, 240), ("Scottsdale", 33.49, -111.93, 236),
        ("Gilbert", 33.35, -111.79, 237), ("Tempe", 33.43, -111.94, 175),
        ("Peoria", 33.58, -112.24, 162), ("Surprise", 33.63, -112.37, 128),
        ("Yuma", 32.69, -114.63, 93), ("Flagstaff", 35.20, -111.65, 70),
        ("Goodyear", 33.44, -112.36, 77), ("Lake Havasu City", 34.48, -114.32, 53),
        ("Casa Grande", 32.88, -111.76, 52), ("Prescott", 34.54, -112.47, 41),
    ],
    "AR": [
        ("Little Rock", 34.75, -92.29, 198), ("Fort Smith", 35.39, -94.40, 88),
        ("Fayetteville", 36.06, -94.16, 80), ("Springdale", 36.19, -94.13, 76),
        ("Jonesboro", 35.84, -90.70, 72), ("North Little Rock", 34.77, -92.27, 66),
        ("Conway", 35.09, -92.44, 64), ("Rogers", 36.33, -94.12, 60),
        ("Pine Bluff", 34.23, -92.00, 46), ("Bentonville", 36.37, -94.21, 40),
        ("Hot Springs", 34.50, -93.06, 35), ("Texarkana", 33.44, -94.04, 30),
    ],
    "CA": [
        ("Los Angeles", 34.05, -118.24, 3972), ("San Diego", 32.72, -117.16, 1395),
        ("San Jose", 37.34, -121.89, 1026), ("San Francisco", 37.77, -122.42, 864),
        ("Fresno", 36.75, -119.77, 520), ("Sacramento", 38.58, -121.49, 485),
        ("Long Beach", 33.77, -118.19, 474), ("Oakland", 37.80, -122.27, 420),
        ("Bakersfield", 35.37, -119.02, 373), ("Anaheim", 33.84, -117.91, 351),
        ("Santa Ana", 33.75, -117.87, 335), ("Riverside", 33.95, -117.40, 322),
        ("Stockton", 37.96, -121.29, 306), ("Chula Vista", 32.64, -117.08, 265),
        ("Irvine", 33.68, -117.83, 256), ("Fremont", 37.55, -121.99, 232),
        ("San Bernardino", 34.11, -117.29, 216), ("Modesto", 37.64, -120.99, 211),
        ("Fontana", 34.09, -117.44, 207), ("Oxnard", 34.20, -119.18, 207),
        ("Moreno Valley", 33.94, -117.23, 204), ("Glendale", 34.14, -118.25, 200),
        ("Huntington Beach", 33.66, -118.00, 200), ("Santa Clarita", 34.39, -118.54, 181),
        ("Garden Grove", 33.77, -117.94, 175), ("Oceanside", 33.20, -117.38, 175),
        ("Rancho Cucamonga", 34.11, -117.59, 175), ("Santa Rosa", 38.44, -122.71, 175),
        ("Ontario", 34.06, -117.65, 171), ("Elk Grove", 38.41, -121.37, 166),
        ("Corona", 33.87, -117.57, 164), ("Lancaster", 34.69, -118.15, 160),
        ("Palmdale", 34.58, -118.12, 157), ("Salinas", 36.68, -121.66, 157),
        ("Hayward", 37.67, -122.08, 158), ("Pomona", 34.06, -117.75, 152),
        ("Escondido", 33.12, -117.09, 151), ("Sunnyvale", 37.37, -122.04, 151),
        ("Torrance", 33.84, -118.34, 147), ("Pasadena", 34.15, -118.14, 141),
        ("Orange", 33.79, -117.85, 140), ("Fullerton", 33.87, -117.92, 140),
        ("Roseville", 38.75, -121.29, 132), ("Visalia", 36.33, -119.29, 130),
        ("Concord", 37.98, -122.03, 128), ("Thousand Oaks", 34.17, -118.84, 128),
        ("Santa Clara", 37.35, -121.95, 126), ("Vallejo", 38.10, -122.26, 121),
        ("Berkeley", 37.87, -122.27, 120), ("Fairfield", 38.25, -122.04, 114),
        ("Antioch", 38.00, -121.81, 110), ("Inglewood", 33.96, -118.35, 110),
        ("Richmond", 37.94, -122.35, 109), ("Ventura", 34.27, -119.23, 106),
        ("Daly City", 37.69, -122.47, 106), ("Norwalk", 33.91, -118.08, 106),
        ("Clovis", 36.83, -119.70, 104), ("Burbank", 34.18, -118.31, 104),
        ("San Mateo", 37.56, -122.33, 103), ("El Monte", 34.07, -118.03, 116),
        ("Compton", 33.90, -118.22, 97), ("Vista", 33.20, -117.24, 97),
        ("Vacaville", 38.36, -121.99, 95), ("Santa Monica", 34.02, -118.48, 92),
        ("Santa Barbara", 34.42, -119.70, 92), ("Redding", 40.59, -122.39, 91),
        ("Chico", 39.73, -121.84, 90), ("Merced", 37.30, -120.48, 82),
        ("Redwood City", 37.49, -122.24, 85), ("Napa", 38.30, -122.29, 80),
    ],
    "CO": [
        ("Denver", 39.74, -104.99, 683), ("Colorado Springs", 38.83, -104.82, 456),
        ("Aurora", 39.73, -104.83, 359), ("Fort Collins", 40.59, -105.08, 161),
        ("Lakewood", 39.70, -105.08, 153), ("Thornton", 39.87, -104.97, 136),
        ("Arvada", 39.80, -105.09, 117), ("Westminster", 39.84, -105.04, 113),
        ("Pueblo", 38.25, -104.61, 110), ("Centennial", 39.58, -104.88, 109),
        ("Boulder", 40.01, -105.27, 107), ("Greeley", 40.42, -104.71, 100),
        ("Longmont", 40.17, -105.10, 92), ("Loveland", 40.40, -105.07, 76),
        ("Grand Junction", 39.06, -108.55, 61), ("Broomfield", 39.92, -105.09, 66),
    ],
    "CT": [
        ("Bridgeport", 41.19, -73.20, 148), ("New Haven", 41.31, -72.92, 130),
        ("Stamford", 41.05, -73.54, 129), ("Hartford", 41.76, -72.69, 124),
        ("Waterbury", 41.56, -73.05, 109), ("Norwalk", 41.12, -73.41, 88),
        ("Danbury", 41.39, -73.45, 85), ("New Britain", 41.66, -72.78, 73),
        ("Bristol", 41.67, -72.95, 60), ("Meriden", 41.54, -72.81, 60),
        ("Milford", 41.22, -73.06, 53), ("West Haven", 41.27, -72.95, 55),
        ("Middletown", 41.56, -72.65, 47), ("Norwich", 41.52, -72.08, 40),
    ],
    "DE": [
        ("Wilmington", 39.75, -75.55, 72), ("Dover", 39.16, -75.52, 37),
        ("Newark", 39.68, -75.75, 33), ("Middletown", 39.45, -75.72, 20),
        ("Smyrna", 39.30, -75.60, 11), ("Milford", 38.91, -75.43, 11),
        ("Seaford", 38.64, -75.61, 8), ("Georgetown", 38.69, -75.39, 7),
    ],
    "DC": [
        ("Washington", 38.91, -77.04, 672),
    ],
    "FL": [
        ("Jacksonville", 30.33, -81.66, 868), ("Miami", 25.76, -80.19, 441),
        ("Tampa", 27.95, -82.46, 369), ("Orlando", 28.54, -81.38, 270),
        ("St. Petersburg", 27.77, -82.64, 257), ("Hialeah", 25.86, -80.28, 237),
        ("Tallahassee", 30.44, -84.28, 189), ("Fort Lauderdale", 26.12, -80.14, 178),
        ("Port St. Lucie", 27.27, -80.35, 179), ("Cape Coral", 26.56, -81.95, 175),
        ("Pembroke Pines", 26.01, -80.34, 166), ("Hollywood", 26.01, -80.15, 149),
        ("Miramar", 25.98, -80.30, 134), ("Gainesville", 29.65, -82.32, 130),
        ("Coral Springs", 26.27, -80.27, 130), ("Clearwater", 27.97, -82.76, 113),
        ("Miami Gardens", 25.94, -80.25, 112), ("Palm Bay", 28.03, -80.62, 108),
        ("West Palm Beach", 26.72, -80.05, 106), ("Pompano Beach", 26.24, -80.12, 106),
        ("Lakeland", 28.04, -81.95, 103), ("Davie", 26.08, -80.28, 99),
        ("Boca Raton", 26.37, -80.10, 93), ("Sunrise", 26.15, -80.29, 92),
        ("Deltona", 28.90, -81.26, 88), ("Plantation", 26.13, -80.25, 89),
        ("Palm Coast", 29.54, -81.22, 82), ("Largo", 27.91, -82.79, 82),
        ("Melbourne", 28.08, -80.61, 80), ("Deerfield Beach", 26.32, -80.10, 78),
        ("Fort Myers", 26.64, -81.87, 74), ("Boynton Beach", 26.53, -80.08, 73),
        ("Daytona Beach", 29.21, -81.02, 66), ("Kissimmee", 28.29, -81.41, 68),
        ("Sarasota", 27.34, -82.53, 55), ("Pensacola", 30.42, -87.22, 53),
        ("Ocala", 29.19, -82.14, 58), ("Bradenton", 27.50, -82.57, 55),
    ],
    "GA": [
        ("Atlanta", 33.75, -84.39, 464), ("Columbus", 32.46, -84.99, 200),
        ("Augusta", 33.47, -81.97, 197), ("Savannah", 32.08, -81.09, 146),
        ("Athens", 33.96, -83.38, 123), ("Sandy Springs", 33.92, -84.38, 106),
        ("Macon", 32.84, -83.63, 91), ("Roswell", 34.02, -84.36, 95),
        ("Albany", 31.58, -84.16, 75), ("Johns Creek", 34.03, -84.20, 84),
        ("Warner Robins", 32.62, -83.60, 74), ("Alpharetta", 34.08, -84.29, 64),
        ("Marietta", 33.95, -84.55, 61), ("Valdosta", 30.83, -83.28, 56),
        ("Smyrna", 33.88, -84.51, 56), ("Dunwoody", 33.95, -84.33, 48),
        ("Rome", 34.26, -85.16, 36), ("Gainesville", 34.30, -83.82, 39),
    ],
    "HI": [
        ("Honolulu", 21.31, -157.86, 352), ("Hilo", 19.71, -155.08, 45),
        ("Kailua", 21.40, -157.74, 38), ("Kapolei", 21.34, -158.06, 21),
        ("Kaneohe", 21.40, -157.80, 34), ("Waipahu", 21.39, -158.01, 38),
        ("Pearl City", 21.40, -157.97, 47), ("Kahului", 20.89, -156.47, 26),
    ],
    "ID": [
        ("Boise", 43.62, -116.21, 223), ("Meridian", 43.61, -116.39, 95),
        ("Nampa", 43.54, -116.56, 91), ("Idaho Falls", 43.49, -112.03, 60),
        ("Pocatello", 42.86, -112.45, 54), ("Caldwell", 43.66, -116.69, 53),
        ("Coeur d'Alene", 47.68, -116.78, 50), ("Twin Falls", 42.56, -114.46, 48),
        ("Lewiston", 46.42, -117.02, 33), ("Post Falls", 47.72, -116.95, 31),
        ("Rexburg", 43.83, -111.79, 28), ("Moscow", 46.73, -117.00, 25),
    ],
    "IL": [
        ("Chicago", 41.88, -87.63, 2721), ("Aurora", 41.76, -88.32, 201),
        ("Rockford", 42.27, -89.09, 148), ("Joliet", 41.53, -88.08, 148),
        ("Naperville", 41.75, -88.15, 147), ("Springfield", 39.78, -89.65, 117),
        ("Peoria", 40.69, -89.59, 115), ("Elgin", 42.04, -88.28, 112),
        ("Waukegan", 42.36, -87.84, 88), ("Champaign", 40.12, -88.24, 86),
        ("Bloomington", 40.48, -89.00, 79), ("Cicero", 41.85, -87.75, 83),
        ("Decatur", 39.84, -88.95, 73), ("Arlington Heights", 42.09, -87.98, 75),
        ("Evanston", 42.05, -87.69, 75), ("Schaumburg", 42.03, -88.08, 74),
        ("Bolingbrook", 41.70, -88.07, 74), ("Palatine", 42.11, -88.03, 69),
        ("Skokie", 42.03, -87.73, 65), ("Des Plaines", 42.03, -87.88, 58),
        ("Orland Park", 41.61, -87.85, 58), ("Oak Lawn", 41.71, -87.75, 57),
        ("Berwyn", 41.85, -87.79, 57), ("Normal", 40.51, -88.99, 54),
    ],
    "IN": [
        ("Indianapolis", 39.77, -86.16, 853), ("Fort Wayne", 41.08, -85.14, 264),
        ("Evansville", 37.97, -87.57, 120), ("South Bend", 41.68, -86.25, 101),
        ("Carmel", 39.98, -86.13, 91), ("Fishers", 39.96, -86.01, 90),
        ("Bloomington", 39.17, -86.53, 85), ("Hammond", 41.58, -87.50, 77),
        ("Gary", 41.60, -87.35, 76), ("Lafayette", 40.42, -86.88, 71),
        ("Muncie", 40.19, -85.39, 70), ("Terre Haute", 39.47, -87.41, 61),
        ("Kokomo", 40.49, -86.13, 57), ("Noblesville", 40.05, -86.01, 61),
        ("Anderson", 40.10, -85.68, 55), ("Greenwood", 39.61, -86.11, 57),
        ("Elkhart", 41.68, -85.98, 52), ("Mishawaka", 41.66, -86.17, 48),
    ],
    "IA": [
        ("Des Moines", 41.59, -93.62, 215), ("Cedar Rapids", 41.98, -91.67, 130),
        ("Davenport", 41.52, -90.58, 103), ("Sioux City", 42.50, -96.40, 83),
        ("Iowa City", 41.66, -91.53, 74), ("Waterloo", 42.49, -92.34, 68),
        ("Council Bluffs", 41.26, -95.86, 62), ("Ames", 42.03, -93.62, 66),
        ("West Des Moines", 41.58, -93.71, 64), ("Dubuque", 42.50, -90.66, 58),
        ("Ankeny", 41.73, -93.60, 58), ("Urbandale", 41.63, -93.71, 43),
        ("Cedar Falls", 42.53, -92.45, 41), ("Marion", 42.03, -91.60, 38),
    ],
    "KS": [
        ("Wichita", 37.69, -97.34, 390), ("Overland Park", 38.98, -94.67, 189),
        ("Kansas City", 39.11, -94.63, 151), ("Olathe", 38.88, -94.82, 135),
        ("Topeka", 39.05, -95.68, 127), ("Lawrence", 38.97, -95.24, 95),
        ("Shawnee", 39.02, -94.72, 65), ("Manhattan", 39.18, -96.57, 56),
        ("Lenexa", 38.95, -94.73, 52), ("Salina", 38.84, -97.61, 48),
        ("Hutchinson", 38.06, -97.93, 41), ("Leavenworth", 39.31, -94.92, 36),
    ],
    "KY": [
        ("Louisville", 38.25, -85.76, 615), ("Lexington", 38.04, -84.50, 318),
        ("Bowling Green", 36.99, -86.44, 65), ("Owensboro", 37.77, -87.11, 59),
        ("Covington", 39.08, -84.51, 41), ("Richmond", 37.75, -84.29, 35),
        ("Georgetown", 38.21, -84.56, 33), ("Florence", 38.99, -84.63, 32),
        ("Hopkinsville", 36.87, -87.49, 32), ("Nicholasville", 37.88, -84.57, 30),
        ("Elizabethtown", 37.69, -85.86, 30), ("Frankfort", 38.20, -84.87, 27),
        ("Paducah", 37.08, -88.60, 25), ("Henderson", 37.84, -87.59, 29),
    ],
    "LA": [
        ("New Orleans", 29.95, -90.07, 389), ("Baton Rouge", 30.45, -91.15, 229),
        ("Shreveport", 32.53, -93.75, 197), ("Lafayette", 30.22, -92.02, 127),
        ("Lake Charles", 30.21, -93.22, 77), ("Kenner", 30.01, -90.24, 67),
        ("Bossier City", 32.52, -93.73, 68), ("Monroe", 32.51, -92.12, 49),
        ("Alexandria", 31.31, -92.45, 48), ("Houma", 29.60, -90.72, 34),
        ("New Iberia", 30.00, -91.82, 30), ("Slidell", 30.28, -89.78, 28),
    ],
    "ME": [
        ("Portland", 43.66, -70.26, 67), ("Lewiston", 44.10, -70.21, 36),
        ("Bangor", 44.80, -68.77, 32), ("South Portland", 43.64, -70.24, 25),
        ("Auburn", 44.10, -70.23, 23), ("Biddeford", 43.49, -70.45, 21),
        ("Sanford", 43.44, -70.77, 21), ("Augusta", 44.31, -69.78, 19),
        ("Saco", 43.50, -70.44, 19), ("Westbrook", 43.68, -70.37, 18),
    ],
    "MD": [
        ("Baltimore", 39.29, -76.61, 621), ("Frederick", 39.41, -77.41, 70),
        ("Rockville", 39.08, -77.15, 66), ("Gaithersburg", 39.14, -77.20, 67),
        ("Bowie", 38.94, -76.73, 58), ("Hagerstown", 39.64, -77.72, 40),
        ("Annapolis", 38.98, -76.49, 39), ("Salisbury", 38.36, -75.60, 33),
        ("College Park", 38.98, -76.94, 32), ("Laurel", 39.10, -76.85, 26),
        ("Greenbelt", 39.00, -76.88, 24), ("Cumberland", 39.65, -78.76, 20),
    ],
    "MA": [
        ("Boston", 42.36, -71.06, 667), ("Worcester", 42.26, -71.80, 184),
        ("Springfield", 42.10, -72.59, 154), ("Lowell", 42.63, -71.32, 110),
        ("Cambridge", 42.37, -71.11, 110), ("New Bedford", 41.64, -70.93, 95),
        ("Brockton", 42.08, -71.02, 95), ("Quincy", 42.25, -71.00, 93),
        ("Lynn", 42.47, -70.95, 92), ("Fall River", 41.70, -71.16, 89),
        ("Newton", 42.34, -71.21, 89), ("Lawrence", 42.71, -71.16, 79),
        ("Somerville", 42.39, -71.10, 79), ("Framingham", 42.28, -71.42, 70),
        ("Haverhill", 42.78, -71.08, 62), ("Waltham", 42.38, -71.24, 62),
        ("Malden", 42.43, -71.07, 60), ("Brookline", 42.33, -71.12, 59),
        ("Plymouth", 41.96, -70.67, 58), ("Medford", 42.42, -71.11, 57),
        ("Taunton", 41.90, -71.09, 56), ("Chicopee", 42.15, -72.61, 55),
    ],
    "MI": [
        ("Detroit", 42.33, -83.05, 677), ("Grand Rapids", 42.96, -85.66, 196),
        ("Warren", 42.51, -83.01, 135), ("Sterling Heights", 42.58, -83.03, 132),
        ("Ann Arbor", 42.28, -83.74, 117), ("Lansing", 42.73, -84.56, 115),
        ("Flint", 43.01, -83.69, 98), ("Dearborn", 42.32, -83.18, 95),
        ("Livonia", 42.40, -83.37, 94), ("Westland", 42.32, -83.40, 82),
        ("Troy", 42.61, -83.15, 83), ("Farmington Hills", 42.49, -83.38, 81),
        ("Kalamazoo", 42.29, -85.59, 76), ("Wyoming", 42.91, -85.71, 75),
        ("Southfield", 42.47, -83.22, 73), ("Rochester Hills", 42.66, -83.15, 73),
        ("Taylor", 42.24, -83.27, 62), ("Pontiac", 42.64, -83.29, 60),
        ("Saginaw", 43.42, -83.95, 49), ("Battle Creek", 42.32, -85.18, 52),
        ("Muskegon", 43.23, -86.25, 38), ("Port Huron", 42.97, -82.42, 29),
    ],
    "MN": [
        ("Minneapolis", 44.98, -93.27, 411), ("St. Paul", 44.95, -93.09, 300),
        ("Rochester", 44.02, -92.47, 112), ("Duluth", 46.79, -92.10, 86),
        ("Bloomington", 44.84, -93.30, 85), ("Brooklyn Park", 45.09, -93.36, 79),
        ("Plymouth", 45.01, -93.46, 74), ("St. Cloud", 45.56, -94.16, 67),
        ("Eagan", 44.80, -93.17, 66), ("Woodbury", 44.92, -92.96, 68),
        ("Maple Grove", 45.07, -93.46, 65), ("Eden Prairie", 44.85, -93.47, 63),
        ("Coon Rapids", 45.12, -93.29, 62), ("Burnsville", 44.77, -93.28, 61),
        ("Mankato", 44.16, -94.00, 41), ("Moorhead", 46.87, -96.77, 42),
    ],
    "MS": [
        ("Jackson", 32.30, -90.18, 171), ("Gulfport", 30.37, -89.09, 72),
        ("Southaven", 34.99, -90.00, 53), ("Hattiesburg", 31.33, -89.29, 46),
        ("Biloxi", 30.40, -88.89, 45), ("Meridian", 32.36, -88.70, 39),
        ("Tupelo", 34.26, -88.70, 38), ("Greenville", 33.41, -91.06, 32),
        ("Olive Branch", 34.96, -89.83, 35), ("Clinton", 32.34, -90.32, 25),
        ("Vicksburg", 32.35, -90.88, 23), ("Pascagoula", 30.37, -88.56, 22),
    ],
    "MO": [
        ("Kansas City", 39.10, -94.58, 475), ("St. Louis", 38.63, -90.20, 315),
        ("Springfield", 37.21, -93.29, 167), ("Columbia", 38.95, -92.33, 120),
        ("Independence", 39.09, -94.42, 117), ("Lee's Summit", 38.92, -94.38, 96),
        ("O'Fallon", 38.81, -90.70, 86), ("St. Joseph", 39.77, -94.85, 77),
        ("St. Charles", 38.78, -90.48, 69), ("Blue Springs", 39.02, -94.28, 54),
        ("St. Peters", 38.80, -90.63, 57), ("Florissant", 38.79, -90.32, 52),
        ("Joplin", 37.08, -94.51, 51), ("Chesterfield", 38.66, -90.58, 48),
        ("Jefferson City", 38.58, -92.17, 43), ("Cape Girardeau", 37.31, -89.52, 39),
        ("Ferguson", 38.74, -90.30, 21),
    ],
    "MT": [
        ("Billings", 45.78, -108.50, 110), ("Missoula", 46.87, -113.99, 72),
        ("Great Falls", 47.50, -111.30, 59), ("Bozeman", 45.68, -111.04, 45),
        ("Butte", 46.00, -112.53, 34), ("Helena", 46.59, -112.04, 31),
        ("Kalispell", 48.20, -114.31, 23), ("Havre", 48.55, -109.68, 10),
        ("Anaconda", 46.13, -112.94, 9), ("Miles City", 46.41, -105.84, 9),
    ],
    "NE": [
        ("Omaha", 41.26, -95.93, 444), ("Lincoln", 40.81, -96.68, 277),
        ("Bellevue", 41.14, -95.91, 54), ("Grand Island", 40.93, -98.34, 51),
        ("Kearney", 40.70, -99.08, 33), ("Fremont", 41.43, -96.50, 26),
        ("Hastings", 40.59, -98.39, 25), ("Norfolk", 42.03, -97.42, 24),
        ("North Platte", 41.12, -100.77, 24), ("Papillion", 41.15, -96.04, 20),
        ("Columbus", 41.43, -97.37, 23), ("Scottsbluff", 41.87, -103.66, 15),
    ],
    "NV": [
        ("Las Vegas", 36.17, -115.14, 624), ("Henderson", 36.04, -114.98, 286),
        ("Reno", 39.53, -119.81, 241), ("North Las Vegas", 36.20, -115.12, 231),
        ("Sparks", 39.54, -119.75, 96), ("Carson City", 39.16, -119.77, 54),
        ("Elko", 40.83, -115.76, 20), ("Mesquite", 36.81, -114.07, 18),
        ("Boulder City", 35.98, -114.83, 16), ("Fernley", 39.61, -119.25, 19),
    ],
    "NH": [
        ("Manchester", 42.99, -71.45, 110), ("Nashua", 42.77, -71.47, 87),
        ("Concord", 43.21, -71.54, 43), ("Dover", 43.20, -70.87, 31),
        ("Rochester", 43.30, -70.98, 30), ("Keene", 42.93, -72.28, 23),
        ("Portsmouth", 43.08, -70.76, 21), ("Laconia", 43.53, -71.47, 16),
        ("Lebanon", 43.64, -72.25, 13), ("Claremont", 43.38, -72.35, 13),
    ],
    "NJ": [
        ("Newark", 40.74, -74.17, 281), ("Jersey City", 40.73, -74.08, 264),
        ("Paterson", 40.92, -74.17, 147), ("Elizabeth", 40.66, -74.21, 129),
        ("Edison", 40.52, -74.41, 102), ("Woodbridge", 40.56, -74.28, 101),
        ("Trenton", 40.22, -74.76, 84), ("Camden", 39.93, -75.12, 77),
        ("Clifton", 40.86, -74.16, 86), ("Passaic", 40.86, -74.13, 71),
        ("Union City", 40.78, -74.02, 70), ("Bayonne", 40.67, -74.11, 66),
        ("East Orange", 40.77, -74.20, 65), ("Vineland", 39.49, -75.03, 61),
        ("New Brunswick", 40.49, -74.45, 57), ("Hoboken", 40.74, -74.03, 54),
        ("Perth Amboy", 40.52, -74.27, 52), ("Plainfield", 40.63, -74.41, 51),
        ("Atlantic City", 39.36, -74.42, 39),
    ],
    "NM": [
        ("Albuquerque", 35.08, -106.65, 559), ("Las Cruces", 32.31, -106.78, 101),
        ("Rio Rancho", 35.23, -106.66, 96), ("Santa Fe", 35.69, -105.94, 84),
        ("Roswell", 33.39, -104.52, 48), ("Farmington", 36.73, -108.22, 45),
        ("Clovis", 34.40, -103.21, 39), ("Hobbs", 32.71, -103.14, 38),
        ("Alamogordo", 32.90, -105.96, 31), ("Carlsbad", 32.42, -104.23, 28),
        ("Gallup", 35.53, -108.74, 22), ("Deming", 32.27, -107.76, 15),
    ],
    "NY": [
        ("New York", 40.71, -74.01, 8550), ("Buffalo", 42.89, -78.88, 258),
        ("Rochester", 43.16, -77.61, 210), ("Yonkers", 40.93, -73.90, 201),
        ("Syracuse", 43.05, -76.15, 144), ("Albany", 42.65, -73.75, 98),
        ("New Rochelle", 40.91, -73.78, 79), ("Mount Vernon", 40.91, -73.84, 68),
        ("Schenectady", 42.81, -73.94, 65), ("Utica", 43.10, -75.23, 61),
        ("White Plains", 41.03, -73.76, 58), ("Hempstead", 40.71, -73.62, 55),
        ("Troy", 42.73, -73.69, 50), ("Niagara Falls", 43.10, -79.04, 49),
        ("Binghamton", 42.10, -75.91, 46), ("Freeport", 40.66, -73.58, 43),
        ("Valley Stream", 40.66, -73.70, 37), ("Long Beach", 40.59, -73.66, 34),
        ("Rome", 43.21, -75.46, 32), ("Ithaca", 42.44, -76.50, 31),
        ("Poughkeepsie", 41.70, -73.92, 31), ("Jamestown", 42.10, -79.24, 30),
        ("Elmira", 42.09, -76.81, 28), ("Newburgh", 41.50, -74.01, 28),
    ],
    "NC": [
        ("Charlotte", 35.23, -80.84, 827), ("Raleigh", 35.78, -78.64, 452),
        ("Greensboro", 36.07, -79.79, 285), ("Durham", 35.99, -78.90, 258),
        ("Winston-Salem", 36.10, -80.24, 241), ("Fayetteville", 35.05, -78.88, 204),
        ("Cary", 35.79, -78.78, 160), ("Wilmington", 34.23, -77.94, 115),
        ("High Point", 35.96, -80.01, 110), ("Greenville", 35.61, -77.37, 91),
        ("Asheville", 35.60, -82.55, 89), ("Concord", 35.41, -80.58, 86),
        ("Gastonia", 35.26, -81.18, 75), ("Jacksonville", 34.75, -77.43, 70),
        ("Chapel Hill", 35.91, -79.06, 59), ("Rocky Mount", 35.94, -77.79, 56),
        ("Burlington", 36.10, -79.44, 52), ("Huntersville", 35.41, -80.84, 53),
        ("Wilson", 35.72, -77.92, 49), ("Kannapolis", 35.49, -80.62, 46),
        ("Hickory", 35.73, -81.34, 40), ("Goldsboro", 35.38, -77.99, 35),
    ],
    "ND": [
        ("Fargo", 46.88, -96.79, 118), ("Bismarck", 46.81, -100.78, 71),
        ("Grand Forks", 47.93, -97.03, 57), ("Minot", 48.23, -101.30, 48),
        ("West Fargo", 46.87, -96.90, 33), ("Williston", 48.15, -103.62, 26),
        ("Dickinson", 46.88, -102.79, 22), ("Mandan", 46.83, -100.89, 21),
        ("Jamestown", 46.91, -98.71, 15), ("Wahpeton", 46.27, -96.61, 8),
    ],
    "OH": [
        ("Columbus", 39.96, -83.00, 850), ("Cleveland", 41.50, -81.69, 388),
        ("Cincinnati", 39.10, -84.51, 298), ("Toledo", 41.66, -83.56, 279),
        ("Akron", 41.08, -81.52, 197), ("Dayton", 39.76, -84.19, 141),
        ("Parma", 41.40, -81.72, 80), ("Canton", 40.80, -81.37, 71),
        ("Youngstown", 41.10, -80.65, 65), ("Lorain", 41.45, -82.18, 64),
        ("Hamilton", 39.40, -84.56, 62), ("Springfield", 39.92, -83.81, 59),
        ("Kettering", 39.69, -84.17, 55), ("Elyria", 41.37, -82.11, 54),
        ("Lakewood", 41.48, -81.80, 51), ("Cuyahoga Falls", 41.13, -81.48, 49),
        ("Middletown", 39.52, -84.40, 49), ("Newark", 40.06, -82.40, 48),
        ("Euclid", 41.59, -81.53, 48), ("Mansfield", 40.76, -82.52, 47),
        ("Mentor", 41.69, -81.34, 47), ("Cleveland Heights", 41.52, -81.56, 45),
        ("Strongsville", 41.31, -81.84, 45), ("Lima", 40.74, -84.11, 38),
    ],
    "OK": [
        ("Oklahoma City", 35.47, -97.52, 631), ("Tulsa", 36.15, -95.99, 403),
        ("Norman", 35.22, -97.44, 120), ("Broken Arrow", 36.06, -95.79, 107),
        ("Lawton", 34.61, -98.39, 97), ("Edmond", 35.65, -97.48, 90),
        ("Moore", 35.34, -97.49, 60), ("Midwest City", 35.45, -97.40, 57),
        ("Enid", 36.40, -97.88, 51), ("Stillwater", 36.12, -97.06, 49),
        ("Muskogee", 35.75, -95.37, 38), ("Bartlesville", 36.75, -95.98, 36),
        ("Shawnee", 35.33, -96.93, 31), ("Ardmore", 34.17, -97.14, 25),
    ],
    "OR": [
        ("Portland", 45.52, -122.68, 632), ("Salem", 44.94, -123.04, 164),
        ("Eugene", 44.05, -123.09, 163), ("Gresham", 45.50, -122.44, 110),
        ("Hillsboro", 45.52, -122.99, 102), ("Beaverton", 45.49, -122.80, 96),
        ("Bend", 44.06, -121.31, 87), ("Medford", 42.33, -122.88, 79),
        ("Springfield", 44.05, -123.02, 60), ("Corvallis", 44.56, -123.26, 57),
        ("Albany", 44.64, -123.11, 52), ("Tigard", 45.43, -122.78, 51),
        ("Lake Oswego", 45.42, -122.67, 39), ("Keizer", 45.00, -123.02, 38),
        ("Grants Pass", 42.44, -123.33, 37), ("McMinnville", 45.21, -123.20, 33),
    ],
    "PA": [
        ("Philadelphia", 39.95, -75.17, 1567), ("Pittsburgh", 40.44, -80.00, 304),
        ("Allentown", 40.60, -75.47, 120), ("Erie", 42.13, -80.09, 99),
        ("Reading", 40.34, -75.93, 88), ("Scranton", 41.41, -75.66, 77),
        ("Bethlehem", 40.63, -75.37, 75), ("Lancaster", 40.04, -76.31, 59),
        ("Harrisburg", 40.27, -76.89, 49), ("Altoona", 40.52, -78.39, 45),
        ("York", 39.96, -76.73, 44), ("Wilkes-Barre", 41.25, -75.88, 41),
        ("Chester", 39.85, -75.36, 34), ("Easton", 40.69, -75.22, 27),
        ("Lebanon", 40.34, -76.41, 26), ("Hazleton", 40.96, -75.97, 25),
        ("New Castle", 41.00, -80.35, 22), ("Johnstown", 40.33, -78.92, 20),
        ("McKeesport", 40.35, -79.86, 19), ("Williamsport", 41.24, -77.00, 29),
    ],
    "RI": [
        ("Providence", 41.82, -71.41, 179), ("Warwick", 41.70, -71.42, 82),
        ("Cranston", 41.78, -71.44, 81), ("Pawtucket", 41.88, -71.38, 72),
        ("East Providence", 41.81, -71.37, 47), ("Woonsocket", 42.00, -71.51, 41),
        ("Newport", 41.49, -71.31, 25), ("Central Falls", 41.89, -71.39, 19),
        ("Westerly", 41.38, -71.83, 18), ("Bristol", 41.68, -71.27, 22),
    ],
    "SC": [
        ("Columbia", 34.00, -81.03, 134), ("Charleston", 32.78, -79.93, 133),
        ("North Charleston", 32.89, -80.06, 109), ("Mount Pleasant", 32.83, -79.82, 81),
        ("Rock Hill", 34.92, -81.03, 71), ("Greenville", 34.85, -82.40, 67),
        ("Summerville", 33.02, -80.18, 48), ("Sumter", 33.92, -80.34, 41),
        ("Goose Creek", 32.98, -80.03, 41), ("Hilton Head Island", 32.19, -80.74, 40),
        ("Florence", 34.20, -79.77, 38), ("Spartanburg", 34.95, -81.93, 37),
        ("Myrtle Beach", 33.69, -78.89, 31), ("Anderson", 34.50, -82.65, 27),
    ],
    "SD": [
        ("Sioux Falls", 43.54, -96.73, 171), ("Rapid City", 44.08, -103.23, 74),
        ("Aberdeen", 45.46, -98.49, 28), ("Brookings", 44.31, -96.80, 23),
        ("Watertown", 44.90, -97.12, 22), ("Mitchell", 43.71, -98.03, 15),
        ("Yankton", 42.87, -97.40, 15), ("Pierre", 44.37, -100.35, 14),
        ("Huron", 44.36, -98.21, 13), ("Vermillion", 42.78, -96.93, 11),
    ],
    "TN": [
        ("Memphis", 35.15, -90.05, 655), ("Nashville", 36.16, -86.78, 654),
        ("Knoxville", 35.96, -83.92, 185), ("Chattanooga", 35.05, -85.31, 177),
        ("Clarksville", 36.53, -87.36, 146), ("Murfreesboro", 35.85, -86.39, 126),
        ("Franklin", 35.93, -86.87, 74), ("Jackson", 35.61, -88.81, 67),
        ("Johnson City", 36.31, -82.35, 66), ("Bartlett", 35.20, -89.87, 58),
        ("Hendersonville", 36.30, -86.62, 56), ("Kingsport", 36.55, -82.56, 53),
        ("Collierville", 35.04, -89.66, 49), ("Smyrna", 35.98, -86.52, 47),
        ("Cleveland", 35.16, -84.88, 44), ("Brentwood", 36.03, -86.78, 42),
        ("Germantown", 35.09, -89.81, 39), ("Columbia", 35.62, -87.03, 37),
    ],
    "TX": [
        ("Houston", 29.76, -95.37, 2296), ("San Antonio", 29.42, -98.49, 1469),
        ("Dallas", 32.78, -96.80, 1300), ("Austin", 30.27, -97.74, 931),
        ("Fort Worth", 32.76, -97.33, 833), ("El Paso", 31.76, -106.49, 681),
        ("Arlington", 32.74, -97.11, 389), ("Corpus Christi", 27.80, -97.40, 324),
        ("Plano", 33.02, -96.70, 284), ("Laredo", 27.51, -99.51, 255),
        ("Lubbock", 33.58, -101.86, 249), ("Garland", 32.91, -96.64, 236),
        ("Irving", 32.81, -96.95, 236), ("Amarillo", 35.21, -101.83, 198),
        ("Grand Prairie", 32.75, -96.99, 188), ("Brownsville", 25.90, -97.50, 183),
        ("McKinney", 33.20, -96.62, 162), ("Frisco", 33.15, -96.82, 154),
        ("Pasadena", 29.69, -95.21, 153), ("Mesquite", 32.77, -96.60, 144),
        ("Killeen", 31.12, -97.73, 140), ("McAllen", 26.20, -98.23, 140),
        ("Carrollton", 32.98, -96.89, 133), ("Midland", 32.00, -102.08, 132),
        ("Waco", 31.55, -97.15, 132), ("Denton", 33.21, -97.13, 131),
        ("Abilene", 32.45, -99.73, 122), ("Odessa", 31.85, -102.37, 118),
        ("Beaumont", 30.08, -94.10, 118), ("Round Rock", 30.51, -97.68, 115),
        ("The Woodlands", 30.17, -95.51, 109), ("Richardson", 32.95, -96.73, 110),
        ("Pearland", 29.56, -95.29, 108), ("College Station", 30.63, -96.33, 107),
        ("Wichita Falls", 33.91, -98.49, 105), ("Lewisville", 33.05, -96.99, 101),
        ("Tyler", 32.35, -95.30, 103), ("San Angelo", 31.46, -100.44, 100),
        ("League City", 29.51, -95.09, 99), ("Allen", 33.10, -96.67, 99),
        ("Sugar Land", 29.62, -95.64, 88), ("Edinburg", 26.30, -98.16, 87),
        ("Mission", 26.22, -98.32, 83), ("Longview", 32.50, -94.74, 82),
        ("Bryan", 30.67, -96.37, 83), ("Baytown", 29.74, -94.98, 77),
        ("Pharr", 26.19, -98.18, 77), ("Temple", 31.10, -97.34, 73),
        ("Missouri City", 29.62, -95.54, 74), ("Flower Mound", 33.01, -97.10, 71),
        ("Harlingen", 26.19, -97.70, 65), ("North Richland Hills", 32.83, -97.23, 69),
        ("Victoria", 28.81, -97.00, 67), ("Conroe", 30.31, -95.46, 68),
        ("New Braunfels", 29.70, -98.12, 67), ("Galveston", 29.30, -94.80, 50),
    ],
    "UT": [
        ("Salt Lake City", 40.76, -111.89, 193), ("West Valley City", 40.69, -112.00, 136),
        ("Provo", 40.23, -111.66, 116), ("West Jordan", 40.61, -111.94, 111),
        ("Orem", 40.30, -111.70, 94), ("Sandy", 40.58, -111.86, 91),
        ("Ogden", 41.22, -111.97, 85), ("St. George", 37.10, -113.58, 80),
        ("Layton", 41.06, -111.97, 72), ("Taylorsville", 40.66, -111.94, 60),
        ("South Jordan", 40.56, -111.93, 66), ("Lehi", 40.39, -111.85, 58),
        ("Logan", 41.74, -111.83, 50), ("Murray", 40.65, -111.89, 49),
        ("Draper", 40.52, -111.86, 46), ("Bountiful", 40.89, -111.88, 43),
    ],
    "VT": [
        ("Burlington", 44.48, -73.21, 42), ("South Burlington", 44.45, -73.17, 19),
        ("Rutland", 43.61, -72.97, 16), ("Barre", 44.20, -72.50, 9),
        ("Montpelier", 44.26, -72.58, 8), ("Winooski", 44.49, -73.19, 7),
        ("St. Albans", 44.81, -73.08, 7), ("Newport", 44.94, -72.21, 4),
        ("Vergennes", 44.17, -73.26, 3), ("Middlebury", 44.02, -73.17, 9),
    ],
    "VA": [
        ("Virginia Beach", 36.85, -75.98, 453), ("Norfolk", 36.85, -76.29, 246),
        ("Chesapeake", 36.77, -76.29, 236), ("Richmond", 37.54, -77.44, 221),
        ("Newport News", 37.09, -76.47, 182), ("Alexandria", 38.80, -77.05, 154),
        ("Hampton", 37.03, -76.35, 136), ("Roanoke", 37.27, -79.94, 100),
        ("Portsmouth", 36.84, -76.30, 96), ("Suffolk", 36.73, -76.58, 89),
        ("Lynchburg", 37.41, -79.14, 80), ("Harrisonburg", 38.45, -78.87, 53),
        ("Charlottesville", 38.03, -78.48, 47), ("Danville", 36.59, -79.40, 42),
        ("Manassas", 38.75, -77.48, 42), ("Petersburg", 37.23, -77.40, 32),
        ("Fredericksburg", 38.30, -77.46, 28), ("Winchester", 39.19, -78.16, 27),
        ("Arlington", 38.88, -77.10, 230),
    ],
    "WA": [
        ("Seattle", 47.61, -122.33, 684), ("Spokane", 47.66, -117.43, 213),
        ("Tacoma", 47.25, -122.44, 207), ("Vancouver", 45.64, -122.66, 173),
        ("Bellevue", 47.61, -122.20, 139), ("Kent", 47.38, -122.23, 127),
        ("Everett", 47.98, -122.20, 108), ("Renton", 47.48, -122.22, 101),
        ("Spokane Valley", 47.67, -117.24, 94), ("Federal Way", 47.32, -122.31, 96),
        ("Yakima", 46.60, -120.51, 93), ("Kirkland", 47.68, -122.21, 87),
        ("Bellingham", 48.75, -122.48, 85), ("Kennewick", 46.21, -119.14, 79),
        ("Auburn", 47.31, -122.23, 77), ("Pasco", 46.24, -119.10, 71),
        ("Marysville", 48.05, -122.18, 66), ("Lakewood", 47.17, -122.52, 59),
        ("Redmond", 47.67, -122.12, 60), ("Shoreline", 47.76, -122.34, 55),
        ("Olympia", 47.04, -122.90, 50), ("Lacey", 47.05, -122.79, 47),
    ],
    "WV": [
        ("Charleston", 38.35, -81.63, 50), ("Huntington", 38.42, -82.44, 48),
        ("Morgantown", 39.63, -79.96, 31), ("Parkersburg", 39.27, -81.56, 30),
        ("Wheeling", 40.06, -80.72, 27), ("Weirton", 40.42, -80.59, 19),
        ("Fairmont", 39.49, -80.14, 19), ("Martinsburg", 39.46, -77.96, 18),
        ("Beckley", 37.78, -81.19, 17), ("Clarksburg", 39.28, -80.34, 16),
    ],
    "WI": [
        ("Milwaukee", 43.04, -87.91, 600), ("Madison", 43.07, -89.40, 248),
        ("Green Bay", 44.51, -88.01, 105), ("Kenosha", 42.58, -87.82, 100),
        ("Racine", 42.73, -87.78, 78), ("Appleton", 44.26, -88.42, 74),
        ("Waukesha", 43.01, -88.23, 72), ("Eau Claire", 44.81, -91.50, 68),
        ("Oshkosh", 44.02, -88.54, 66), ("Janesville", 42.68, -89.02, 64),
        ("West Allis", 43.02, -88.01, 61), ("La Crosse", 43.80, -91.24, 52),
        ("Sheboygan", 43.75, -87.71, 49), ("Wauwatosa", 43.05, -88.01, 47),
        ("Fond du Lac", 43.78, -88.44, 43), ("Brookfield", 43.06, -88.11, 38),
    ],
    "WY": [
        ("Cheyenne", 41.14, -104.82, 63), ("Casper", 42.85, -106.33, 60),
        ("Laramie", 41.31, -105.59, 32), ("Gillette", 44.29, -105.50, 32),
        ("Rock Springs", 41.59, -109.20, 24), ("Sheridan", 44.80, -106.96, 18),
        ("Green River", 41.53, -109.47, 13), ("Evanston", 41.27, -110.96, 12),
        ("Riverton", 43.02, -108.38, 11), ("Jackson", 43.48, -110.76, 10),
        ("Cody", 44.53, -109.06, 10), ("Rawlins", 41.79, -107.24, 9),
    ],
}


def main():
    out_path = os.path.join(os.path.dirname(__file__), "..", "src", "gvdb", "data", "gazetteer.txt")
    out_path = os.path.normpath(out_path)
    os.makedirs(os.path.dirname(out_path), exist_ok=True)
    rows = []
    for state in sorted(CITIES):
        for city, lat, lon, pop_k in CITIES[state]:
            rows.append((state, -pop_k, city, lat, lon))
    rows.sort()
    with open(out_path, "w", encoding="utf-8") as f:
        f.write("city|state|lat|lon|population\n")
        for state, neg_pop, city, lat, lon in rows:
            f.write(f"{city}|{state}|{lat:.2f}|{lon:.2f}|{-neg_pop * 1000}\n")
    print(f"wrote {len(rows)} entries to {out_path}")


if __name__ == "__main__":
    main()
