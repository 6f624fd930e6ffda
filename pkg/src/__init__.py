# Minimal distortion curve maps
