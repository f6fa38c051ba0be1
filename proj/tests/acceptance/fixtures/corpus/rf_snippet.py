import pandas as pd
from sklearn.ensemble import RandomForestClassifier
from sklearn.preprocessing import StandardScaler

train = pd.read_csv("train.csv")
train_labels = train["TARGET"]

random_forest = RandomForestClassifier(n_estimators=100, random_state=50, verbose=1, n_jobs=-1)
random_forest.fit(train, train_labels)

scaler = StandardScaler()
poly_features = scaler.fit_transform(poly_features_raw)
poly_features_test = scaler.transform(poly_features_test_raw)
random_forest_poly = RandomForestClassifier(n_estimators=100, random_state=50)
random_forest_poly.fit(poly_features, train_labels)
pred = random_forest_poly.predict_proba(poly_features_test)[:, 1]

random_forest_final = RandomForestClassifier(n_estimators=200)
random_forest_final.fit(train, train_labels)
submission = random_forest_final.predict(test)
