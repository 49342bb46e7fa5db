from hypothesis import settings

settings.register_profile('ssw', deadline=None, max_examples=100)
settings.load_profile('ssw')
