def random_complex(rng, count, half_width=3.0, min_imag=0.05):
    """Points in a square around the origin, kept off the real axis."""
    points = []
    while len(points) < count:
        re, im = rng.uniform(-half_width, half_width, size=2)
        if abs(im) > min_imag:
            points.append(complex(re, im))
    return points
