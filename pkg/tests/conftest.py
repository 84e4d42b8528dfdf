from hypothesis import settings

# exact big-integer work has uneven per-example cost; timing is not what is tested
settings.register_profile("exact", deadline=None, max_examples=100)
settings.load_profile("exact")
